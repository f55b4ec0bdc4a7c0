#include "heis/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heis {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) { return p.to_string(); }

Json to_json(const FrameVectorField& X) {
  return Json::array({to_json(X.f[0]), to_json(X.f[1]), to_json(X.f[2])});
}

Json to_json(const Point3& p) {
  return Json::array({to_json(p.x), to_json(p.y), to_json(p.z)});
}

namespace {

Json matrix_json(const RationalMatrix3& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    out.push_back(r);
  }
  return out;
}

Json tensor3_json(const Rational3& t) {
  Json out = Json::array();
  for (const auto& m : t) out.push_back(matrix_json(m));
  return out;
}

Json lambda_json(const MetricModel& m) {
  return m.lambda ? to_json(*m.lambda) : Json(nullptr);
}

}  // namespace

Json geometry_json(const Geometry& geo) {
  const auto& m = geo.model;
  Json frame = Json::array();
  for (const auto& row : m.frame) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(to_json(p));
    frame.push_back(r);
  }
  Json riem = Json::array();
  for (const auto& a : geo.curvature.riem) {
    Json ra = Json::array();
    for (const auto& b : a) ra.push_back(matrix_json(b));
    riem.push_back(ra);
  }
  return {
      {"metric", model_name(m.id)},
      {"lambda", lambda_json(m)},
      {"signature", m.signature},
      {"frame", frame},
      {"structure", tensor3_json(m.structure)},
      {"gamma", tensor3_json(geo.connection.gamma)},
      {"riemann", riem},
      {"ricci", matrix_json(geo.ricci.rho)},
      {"tau", to_json(geo.ricci.tau)},
      {"matter", matrix_json(geo.ricci.matter)},
  };
}

Json solution_json(const SolutionBasis& sol, const MetricModel& model,
                   std::optional<bool> matched) {
  Json basis = Json::array();
  for (const auto& X : sol.basis) basis.push_back(to_json(X));
  return {
      {"metric", model_name(model.id)},
      {"symmetry", kind_name(sol.kind)},
      {"lambda", lambda_json(model)},
      {"degree", sol.degree},
      {"dimension", sol.dimension},
      {"stabilized", sol.stabilized},
      {"degenerate", sol.degenerate},
      {"dimension_by_degree", sol.dimension_by_degree},
      {"basis", basis},
      {"matched_paper_family", matched ? Json(*matched) : Json(nullptr)},
  };
}

Json operator_json(const std::vector<OperatorComponent>& comps) {
  Json out = Json::array();
  for (const auto& c : comps)
    out.push_back({{"component", c.label}, {"value", to_json(c.value)}});
  return out;
}

Json algebra_json(const AlgebraReport& rep) {
  Json sc = Json::array();
  for (int a = 0; a < rep.dimension; ++a)
    for (int b = a + 1; b < rep.dimension; ++b)
      for (int c = 0; c < rep.dimension && rep.closed; ++c)
        if (rep.structure_constants[a][b][c] != 0)
          sc.push_back({{"a", a + 1}, {"b", b + 1}, {"c", c + 1},
                        {"value", to_json(rep.structure_constants[a][b][c])}});
  Json out = {
      {"dimension", rep.dimension},
      {"closed", rep.closed},
      {"antisymmetric", rep.antisymmetric},
      {"jacobi", rep.jacobi},
      {"derived_series", rep.derived_series},
      {"structure_constants", sc},
  };
  if (rep.open_pair)
    out["open_pair"] = {rep.open_pair->first + 1, rep.open_pair->second + 1};
  return out;
}

Json comparison_json(const CollineationComparison& cmp) {
  Json kinds = Json::array(), dims = Json::array(), matrix = Json::object();
  for (std::size_t a = 0; a < cmp.kinds.size(); ++a) {
    kinds.push_back(kind_name(cmp.kinds[a]));
    dims.push_back(cmp.spaces[a].degenerate ? Json("degenerate")
                                            : Json(cmp.spaces[a].dimension));
    Json row = Json::object();
    for (std::size_t b = 0; b < cmp.kinds.size(); ++b)
      row[kind_name(cmp.kinds[b])] = static_cast<bool>(cmp.contains[a][b]);
    matrix[kind_name(cmp.kinds[a])] = row;
  }
  return {{"metric", model_name(cmp.model)},
          {"kinds", kinds},
          {"dimensions", dims},
          {"contains", matrix}};
}

Json causal_json(const CausalReport& rep) {
  Json w = Json::array();
  for (const auto& x : rep.witnesses)
    w.push_back({{"point", to_json(x.point)}, {"sign", x.sign}});
  return {{"norm_squared", to_json(rep.norm_squared)},
          {"classification", causal_name(rep.classification)},
          {"certified", rep.certified},
          {"evidence", rep.certified ? "exact" : "evidence on grid"},
          {"witnesses", w}};
}

Json scan_json(const ScanSummary& s) {
  Json counts = Json::object();
  for (const auto& [c, n] : s.counts) counts[causal_name(c)] = n;
  return {{"total", s.total}, {"counts", counts}, {"evidence", "evidence on grid"}};
}

Json audit_json(const AuditReport& rep) {
  Json lambdas = Json::array();
  for (const auto& l : rep.lambdas) lambdas.push_back(to_json(l));
  Json criteria = Json::array();
  for (int n = 1; n <= kCriterionCount; ++n)
    criteria.push_back({{"criterion", n},
                        {"title", criterion_title(n)},
                        {"verdict", verdict_name(rep.criterion_verdict(n))}});
  Json records = Json::array();
  for (const auto& r : rep.records)
    records.push_back({{"criterion", r.criterion},
                       {"claim", r.claim},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"verdict", verdict_name(r.verdict)}});
  Json systems = Json::array();
  for (const auto& s : rep.affine_systems) {
    Json eqs = Json::array();
    for (const auto& e : s.equations)
      eqs.push_back({{"index", e.index},
                     {"holds_on_solutions", e.holds_on_solutions},
                     {"component", e.component ? Json(*e.component) : Json(nullptr)},
                     {"factor", e.component ? to_json(e.factor) : Json(nullptr)}});
    systems.push_back({{"metric", model_name(s.model)},
                       {"lambda", s.model == ModelId::G3 ? Json(nullptr)
                                                         : to_json(s.lambda)},
                       {"degree", s.degree},
                       {"printed_kernel_dimension", s.printed_kernel_dimension},
                       {"computed_kernel_dimension", s.computed_kernel_dimension},
                       {"same_solution_space", s.same_solution_space},
                       {"discrepant_equations", s.discrepancies()},
                       {"equations", eqs}});
  }
  return {{"lambdas", lambdas},
          {"criteria", criteria},
          {"records", records},
          {"printed_affine_systems", systems},
          {"status", rep.any_fail() ? "FAIL" : "PASS"}};
}

FrameVectorField field_from_json(const Json& j, const MetricModel& model) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("components"))
    throw std::invalid_argument(
        "field must be an object with \"basis\" and \"components\"");
  const auto& comps = j.at("components");
  if (!comps.is_array() || comps.size() != 3)
    throw std::invalid_argument("\"components\" must hold three polynomials");
  Array3<Poly> p;
  for (int i = 0; i < 3; ++i) {
    if (!comps[i].is_string())
      throw std::invalid_argument("components must be polynomial strings");
    p[i] = parse_poly(comps[i].get<std::string>());
  }
  const std::string basis = j.at("basis").get<std::string>();
  if (basis == "frame") return FrameVectorField{p};
  if (basis == "coord") return coord_to_frame(model, CoordVectorField{p});
  throw std::invalid_argument("basis must be \"frame\" or \"coord\"");
}

std::vector<Point3> grid_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("grid must be a nonempty array of points");
  auto value = [](const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw std::invalid_argument("grid coordinates must be integers or \"p/q\"");
  };
  std::vector<Point3> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3)
      throw std::invalid_argument("grid points must have three coordinates");
    out.push_back({value(p[0]), value(p[1]), value(p[2])});
  }
  return out;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (is_scalar(it.value())) width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      bool flat = is_scalar(v) ||
                  (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar));
      if (flat) {
        std::string line;
        if (is_scalar(v)) {
          line = scalar_text(v);
        } else {
          for (const auto& e : v) line += (line.empty() ? "" : "  ") + scalar_text(e);
          if (v.empty()) line = "(none)";
        }
        os << pad << it.key() << ":"
           << std::string(width > it.key().size() ? width - it.key().size() : 0, ' ')
           << " " << line << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    int k = 0;
    for (const auto& e : j) {
      ++k;
      if (is_scalar(e)) {
        os << pad << "- " << scalar_text(e) << "\n";
      } else if (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar)) {
        std::string line;
        for (const auto& x : e) line += (line.empty() ? "" : "  |  ") + scalar_text(x);
        os << pad << "[" << k << "] " << line << "\n";
      } else {
        os << pad << "[" << k << "]\n";
        render(e, indent + 2, os);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace heis
