#include "heis/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace heis;

namespace {

/// Thrown for configuration problems; maps to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string metric = "g0";
  std::string lambda;
  std::string symmetry = "killing";
  int max_degree = kDefaultMaxDegree;
  std::string format = "json";
  std::string out;
  std::string grid = "default";
  std::string field;
  bool scan = false;
};

MetricModel model_from(const Options& o) {
  ModelId id;
  try {
    id = parse_model(o.metric);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  std::optional<Rational> lambda;
  if (!o.lambda.empty()) {
    try {
      lambda = parse_rational(o.lambda);
    } catch (const std::exception& e) {
      throw ConfigError("bad --lambda: " + std::string(e.what()));
    }
  } else if (id != ModelId::G3) {
    lambda = Rational(1);
  }
  try {
    return build_model(id, lambda);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SymmetryKind kind_from(const Options& o) {
  try {
    return parse_kind(o.symmetry);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

/// --field accepts a JSON file, inline JSON, or the name X1..X4 of a
/// printed Killing basis field.
FrameVectorField field_from(const Options& o, const MetricModel& m) {
  if (o.field.empty()) throw ConfigError("--field is required");
  if (o.field.size() == 2 && o.field[0] == 'X' && o.field[1] >= '1' &&
      o.field[1] <= '4') {
    auto basis = reference::killing_basis(
        m.id, m.lambda.value_or(Rational(1)));
    if (basis.empty())
      throw ConfigError("no printed Killing basis for " + model_name(m.id));
    return coord_to_frame(m, basis[o.field[1] - '1']);
  }
  Json j;
  if (!o.field.empty() && o.field.front() == '{') {
    try {
      j = Json::parse(o.field);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("bad --field JSON: ") + e.what());
    }
  } else {
    j = read_json_file(o.field);
  }
  try {
    return field_from_json(j, m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Point3> grid_from(const Options& o) {
  if (o.grid == "default") return default_grid();
  try {
    return grid_from_json(read_json_file(o.grid));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void emit(const Options& o, const Json& doc) {
  std::string text = o.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text;
}

std::optional<bool> family_match(const MetricModel& m, SymmetryKind k,
                                 const SolutionBasis& sol) {
  auto fam = reference::stated_family(m, k);
  if (!fam || sol.degenerate) return std::nullopt;
  return span_equal(sol.basis, *fam);
}

SolutionBasis solve(const Geometry& geo, SymmetryKind k, int max_degree) {
  if (max_degree >= 1) return stabilized_dimension(geo, k, max_degree);
  // A single degree-0 solve: no stabilization evidence is possible.
  SolutionBasis s = nullspace(geo, assemble_system(geo, k, 0));
  s.dimension_by_degree = {s.dimension};
  return s;
}

int cmd_report(const Options& o) {
  emit(o, geometry_json(derive_geometry(model_from(o))));
  return 0;
}

int cmd_solve(const Options& o) {
  Geometry geo = derive_geometry(model_from(o));
  SymmetryKind k = kind_from(o);
  SolutionBasis sol = solve(geo, k, o.max_degree);
  emit(o, solution_json(sol, geo.model, family_match(geo.model, k, sol)));
  return 0;
}

int cmd_verify(const Options& o) {
  Geometry geo = derive_geometry(model_from(o));
  SymmetryKind k = kind_from(o);
  FrameVectorField X = field_from(o, geo.model);
  auto comps = operator_components(geo, k, X);
  bool zero = true;
  for (const auto& c : comps) zero = zero && c.value.is_zero();
  emit(o, {{"metric", model_name(geo.model.id)},
           {"lambda", geo.model.lambda ? to_json(*geo.model.lambda) : Json(nullptr)},
           {"symmetry", kind_name(k)},
           {"field", to_json(X)},
           {"components", operator_json(comps)},
           {"verdict", zero ? "PASS" : "FAIL"}});
  return zero ? 0 : 1;
}

int cmd_algebra(const Options& o, bool all_kinds) {
  Geometry geo = derive_geometry(model_from(o));
  Json doc = {{"metric", model_name(geo.model.id)},
              {"lambda", geo.model.lambda ? to_json(*geo.model.lambda) : Json(nullptr)}};
  std::vector<SymmetryKind> kinds;
  if (all_kinds) kinds.assign(kAllKinds.begin(), kAllKinds.end());
  else kinds.push_back(kind_from(o));
  int status = 0;
  Json algebras = Json::object();
  for (SymmetryKind k : kinds) {
    SolutionBasis sol = solve(geo, k, o.max_degree);
    if (sol.degenerate) {
      algebras[kind_name(k)] = {{"degenerate", true},
                                {"dimension_by_degree", sol.dimension_by_degree}};
      continue;
    }
    AlgebraReport rep = closure_check(geo.model, sol.basis);
    if (!rep.closed || !rep.jacobi) status = 1;
    algebras[kind_name(k)] = algebra_json(rep);
  }
  doc["algebras"] = algebras;
  if (all_kinds && o.max_degree >= 1)
    doc["containment"] = comparison_json(compare_collineation_spaces(geo, o.max_degree));
  emit(o, doc);
  return status;
}

int cmd_causal(const Options& o) {
  MetricModel m = model_from(o);
  if (m.riemannian())
    throw ConfigError("g0 is Riemannian: causal character is trivial");
  auto grid = grid_from(o);
  Json doc = {{"metric", model_name(m.id)},
              {"lambda", m.lambda ? to_json(*m.lambda) : Json(nullptr)},
              {"grid_points", grid.size()}};
  if (!o.field.empty()) {
    FrameVectorField X = field_from(o, m);
    doc["field"] = to_json(X);
    doc["report"] = causal_json(classify(m, X, grid));
  }
  if (o.scan) {
    std::vector<FrameVectorField> basis;
    for (const auto& v : reference::killing_basis(m.id, m.lambda.value_or(Rational(1))))
      basis.push_back(coord_to_frame(m, v));
    if (basis.empty())
      throw ConfigError("no printed Killing basis for " + model_name(m.id));
    doc["scan"] = scan_json(scan_combinations(
        m, basis, default_coefficient_grid(static_cast<int>(basis.size())), grid));
  }
  if (o.field.empty() && !o.scan) throw ConfigError("give --field or --scan");
  emit(o, doc);
  return 0;
}

int cmd_reproduce(const Options& o) {
  AuditOptions opt;
  if (!o.lambda.empty()) {
    try {
      Rational l = parse_rational(o.lambda);
      if (l <= 0) throw ConfigError("--lambda must be positive for g0");
      opt.lambdas = {l};
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad --lambda: " + std::string(e.what()));
    }
  }
  if (o.max_degree < 5)
    throw ConfigError("reproduce needs --max-degree >= 5");
  opt.max_degree = o.max_degree;
  AuditReport rep = run_audit(opt);
  emit(o, audit_json(rep));
  return rep.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetries of left-invariant metrics on the Heisenberg group"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--metric", o.metric, "g0, g1, g2 or g3");
    sub->add_option("--lambda", o.lambda, "metric parameter as p/q");
    sub->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "write output to this file");
  };
  auto degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "largest ansatz degree")
        ->check(CLI::Range(0, 12));
  };

  auto* report = app.add_subcommand("report", "connection, curvature and Ricci data");
  common(report);
  auto* solve_cmd = app.add_subcommand("solve", "polynomial symmetry fields");
  common(solve_cmd);
  degree(solve_cmd);
  solve_cmd->add_option("--symmetry", o.symmetry,
                        "killing, affine, ricci, curvature or matter");
  auto* verify = app.add_subcommand("verify", "apply a symmetry operator to a field");
  common(verify);
  verify->add_option("--symmetry", o.symmetry, "symmetry kind");
  verify->add_option("--field", o.field, "JSON file, inline JSON, or X1..X4")
      ->required();
  auto* algebra = app.add_subcommand("algebra", "closure and containment of symmetry spaces");
  common(algebra);
  degree(algebra);
  auto* algebra_kind = algebra->add_option("--symmetry", o.symmetry,
                                           "one kind (default: all)");
  auto* causal = app.add_subcommand("causal", "causal character of vector fields");
  common(causal);
  causal->add_option("--field", o.field, "JSON file, inline JSON, or X1..X4");
  causal->add_option("--grid", o.grid, "default or a JSON file of points");
  causal->add_flag("--scan", o.scan, "scan combinations of the Killing basis");
  auto* reproduce = app.add_subcommand("reproduce", "run the full audit");
  common(reproduce);
  degree(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*report) return cmd_report(o);
    if (*solve_cmd) return cmd_solve(o);
    if (*verify) return cmd_verify(o);
    if (*algebra) return cmd_algebra(o, algebra_kind->count() == 0);
    if (*causal) return cmd_causal(o);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
