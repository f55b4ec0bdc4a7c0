#include "heis/audit.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace heis {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::EvidenceOnly: return "EVIDENCE-ONLY";
  }
  return "?";
}

std::string criterion_title(int n) {
  static const char* titles[kCriterionCount] = {
      "structure constants",
      "Levi-Civita connection tables",
      "curvature tables",
      "Ricci, scalar curvature and matter tensor",
      "Killing dimensions",
      "affine dimensions and family spans",
      "Killing versus affine spaces",
      "Ricci and curvature collineations",
      "matter collineations",
      "bracket closure and Jacobi identity",
      "norm formulas and causal character of basis fields",
      "causal character of Killing combinations",
      "operator components versus printed displays",
  };
  return n >= 1 && n <= kCriterionCount ? titles[n - 1] : "?";
}

std::vector<int> PrintedSystemCheck::discrepancies() const {
  std::vector<int> out;
  for (const auto& e : equations)
    if (!e.holds_on_solutions || !e.component) out.push_back(e.index);
  return out;
}

Verdict AuditReport::criterion_verdict(int n) const {
  bool any = false, evidence_only = true;
  for (const auto& r : records) {
    if (r.criterion != n) continue;
    any = true;
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    if (r.verdict == Verdict::Pass) evidence_only = false;
  }
  if (!any) return Verdict::Fail;  // nothing was checked
  return evidence_only ? Verdict::EvidenceOnly : Verdict::Pass;
}

bool AuditReport::any_fail() const {
  for (int n = 1; n <= kCriterionCount; ++n)
    if (criterion_verdict(n) == Verdict::Fail) return true;
  return false;
}

namespace {

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::string tag(ModelId id, const std::optional<Rational>& l) {
  std::string s = model_name(id);
  if (l) s += "/lambda=" + to_string(*l);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string vec_text(const Array3<Rational>& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " +
         to_string(v[2]) + ")";
}

std::string matrix_text(const RationalMatrix3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) s += (i ? ", " : "") + vec_text(m[i]);
  return s + "]";
}

std::string gamma_text(const Rational3& g) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (g[i][j][k] != 0)
          s += (s.empty() ? "" : ", ") + std::string("G^") +
               std::to_string(k + 1) + "_" + std::to_string(i + 1) +
               std::to_string(j + 1) + "=" + to_string(g[i][j][k]);
  return s.empty() ? "all zero" : s;
}

std::string riemann_text(const CurvatureComponents& r) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          if (r.riem[i][j][k][l] != 0)
            s += (s.empty() ? "" : ", ") + std::string("R(e") +
                 std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")e" +
                 std::to_string(k + 1) + "=" + to_string(r.riem[i][j][k][l]) +
                 "*e" + std::to_string(l + 1);
  return s.empty() ? "all zero" : s;
}

struct SpaceResult {
  std::optional<SolutionBasis> basis;
  std::string error;
};

/// All solver output for one (model, lambda).
struct ModelRun {
  ModelId id;
  std::optional<Rational> lambda;
  Geometry geo;
  std::map<SymmetryKind, SpaceResult> spaces;
};

SpaceResult solve_kind(const Geometry& geo, SymmetryKind kind, int d_max) {
  try {
    return {stabilized_dimension(geo, kind, d_max), {}};
  } catch (const std::exception& e) {
    return {std::nullopt, e.what()};
  }
}

std::vector<ModelRun> run_models(const AuditOptions& opt) {
  std::vector<ModelRun> runs;
  for (ModelId id : kAllModels) {
    if (id == ModelId::G3) {
      runs.push_back({id, std::nullopt, derive_geometry(build_model(id, std::nullopt)), {}});
      continue;
    }
    for (const auto& l : opt.lambdas)
      runs.push_back({id, l, derive_geometry(build_model(id, l)), {}});
  }
  if (opt.parallel) {
    std::vector<std::pair<std::pair<std::size_t, SymmetryKind>, std::future<SpaceResult>>> jobs;
    for (std::size_t r = 0; r < runs.size(); ++r)
      for (SymmetryKind k : kAllKinds)
        jobs.emplace_back(std::make_pair(r, k),
                          std::async(std::launch::async, solve_kind,
                                     std::cref(runs[r].geo), k, opt.max_degree));
    for (auto& [key, fut] : jobs) runs[key.first].spaces[key.second] = fut.get();
  } else {
    for (auto& run : runs)
      for (SymmetryKind k : kAllKinds)
        run.spaces[k] = solve_kind(run.geo, k, opt.max_degree);
  }
  return runs;
}

/// Frame fields of the printed coordinate Killing basis.
std::vector<FrameVectorField> printed_killing_frame(const MetricModel& m,
                                                    const Rational& l) {
  std::vector<FrameVectorField> out;
  for (const auto& v : reference::killing_basis(m.id, l))
    out.push_back(coord_to_frame(m, v));
  return out;
}

class Auditor {
 public:
  Auditor(const AuditOptions& opt, AuditReport& rep) : opt_(opt), rep_(rep) {}

  void add(int c, std::string claim, std::string expected, std::string computed,
           Verdict v) {
    rep_.records.push_back(
        {c, std::move(claim), std::move(expected), std::move(computed), v});
  }

  void run() {
    runs_ = run_models(opt_);
    for (const auto& r : runs_) geometry(r);
    for (const auto& r : runs_) dimensions(r);
    lambda_independence();
    for (const auto& r : runs_) closure(r);
    for (const auto& r : runs_) causal(r);
    displays();
    affine_systems();
  }

 private:
  const AuditOptions& opt_;
  AuditReport& rep_;
  std::vector<ModelRun> runs_;

  Rational lam(const ModelRun& r) const { return r.lambda.value_or(Rational(1)); }

  // Criteria 1-4.
  void geometry(const ModelRun& r) {
    const auto& m = r.geo.model;
    const std::string t = tag(r.id, r.lambda);
    {
      auto printed = reference::printed_brackets(r.id, lam(r));
      bool ok = verify_structure(m);
      std::string exp, comp;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          Array3<Rational> want{0, 0, 0};
          for (const auto& b : printed) {
            if (b.i - 1 == i && b.j - 1 == j) want = b.coeffs;
            if (b.i - 1 == j && b.j - 1 == i)
              for (int k = 0; k < 3; ++k) want[k] = -b.coeffs[k];
          }
          auto got = recomputed_bracket(m, i, j);
          Array3<Rational> got_c{0, 0, 0};
          for (int k = 0; k < 3; ++k) {
            if (!got[k].is_constant()) ok = false;
            got_c[k] = got[k].constant_term();
            if (got_c[k] != want[k]) ok = false;
          }
          if (i < j) {
            std::string name = "[e" + std::to_string(i + 1) + ",e" +
                               std::to_string(j + 1) + "]=";
            exp += (exp.empty() ? "" : "; ") + name + vec_text(want);
            comp += (comp.empty() ? "" : "; ") + name + vec_text(got_c);
          }
        }
      add(1, "structure-constants/" + t, exp, comp, pass_if(ok));
    }
    {
      auto want = reference::printed_connection(r.id, lam(r));
      const auto& got = r.geo.connection.gamma;
      add(2, "levi-civita/" + t, gamma_text(want), gamma_text(got),
          pass_if(want == got && is_metric_compatible(m, r.geo.connection) &&
                  is_torsion_free(m, r.geo.connection)));
    }
    {
      auto want = reference::expand_curvature(
          reference::printed_curvature(r.id, lam(r)), m.signature);
      const auto& got = r.geo.curvature;
      bool ok = want && want->riem == got.riem;
      add(3, "curvature/" + t,
          want ? riemann_text(*want) : "printed entries contradict each other",
          riemann_text(got), pass_if(ok));
    }
    {
      auto want = reference::printed_ricci(r.id, lam(r));
      const auto& got = r.geo.ricci;
      add(4, "ricci/" + t,
          "rho=" + matrix_text(want.rho) + " tau=" + to_string(want.tau) +
              " T=" + matrix_text(want.matter),
          "rho=" + matrix_text(got.rho) + " tau=" + to_string(got.tau) +
              " T=" + matrix_text(got.matter),
          pass_if(want.rho == got.rho && want.tau == got.tau &&
                  want.matter == got.matter));
    }
  }

  const SolutionBasis* space(const ModelRun& r, SymmetryKind k) const {
    const auto& s = r.spaces.at(k);
    return s.basis ? &*s.basis : nullptr;
  }

  std::string describe(const ModelRun& r, SymmetryKind k) const {
    const auto& s = r.spaces.at(k);
    if (!s.basis) return "error: " + s.error;
    const auto& b = *s.basis;
    if (b.degenerate)
      return "degenerate: kernel is the full ansatz, dims by degree " +
             join_ints(b.dimension_by_degree);
    return "dimension " + std::to_string(b.dimension) + " at degree " +
           std::to_string(b.degree) + " (dims by degree " +
           join_ints(b.dimension_by_degree) + ")";
  }

  bool has_dim(const ModelRun& r, SymmetryKind k, int dim) const {
    auto* b = space(r, k);
    return b && b->stabilized && !b->degenerate && b->dimension == dim;
  }

  // Criteria 5-9.
  void dimensions(const ModelRun& r) {
    using K = SymmetryKind;
    const std::string t = tag(r.id, r.lambda);
    const bool g3 = r.id == ModelId::G3;
    const auto& m = r.geo.model;

    const int kdim = g3 ? 6 : 4;
    add(5, "killing-dimension/" + t, "dimension " + std::to_string(kdim),
        describe(r, K::Killing), pass_if(has_dim(r, K::Killing, kdim)));
    if (!g3) {
      auto* kb = space(r, K::Killing);
      bool ok = kb && span_equal(kb->basis, printed_killing_frame(m, lam(r)));
      add(5, "killing-basis-span/" + t, "span of X1..X4",
          ok ? "equal spans" : "spans differ", pass_if(ok));
    }

    const int adim = g3 ? 12 : 4, adeg = g3 ? 5 : 2;
    {
      auto* ab = space(r, K::Affine);
      bool dim_ok = has_dim(r, K::Affine, adim) && ab->degree <= adeg;
      add(6, "affine-dimension/" + t,
          "dimension " + std::to_string(adim) + " by degree " +
              std::to_string(adeg),
          describe(r, K::Affine), pass_if(dim_ok));
      bool span_ok =
          ab && span_equal(ab->basis, reference::affine_family(r.id, lam(r)));
      add(6, "affine-family-span/" + t, "span of the closed-form family",
          span_ok ? "equal spans" : "spans differ", pass_if(span_ok));
    }

    {
      auto* kb = space(r, K::Killing);
      auto* ab = space(r, K::Affine);
      if (!g3) {
        bool ok = kb && ab && span_equal(kb->basis, ab->basis);
        add(7, "killing-equals-affine/" + t, "Killing = affine",
            ok ? "equal spans" : "spans differ", pass_if(ok));
      } else {
        bool sub = kb && ab && span_contains(ab->basis, kb->basis);
        bool proper = sub && !span_contains(kb->basis, ab->basis);
        std::string comp =
            kb && ab ? std::to_string(kb->dimension) + " in " +
                           std::to_string(ab->dimension) +
                           (proper ? ", proper" : sub ? ", equal" : ", not contained")
                     : "error";
        add(7, "killing-properly-in-affine/" + t, "6 in 12, proper", comp,
            pass_if(proper && kb->dimension == 6 && ab->dimension == 12));
      }
    }

    if (!g3) {
      auto* rb = space(r, K::Ricci);
      auto* kb = space(r, K::Killing);
      auto* cb = space(r, K::Curvature);
      add(8, "ricci-dimension/" + t, "dimension 4", describe(r, K::Ricci),
          pass_if(has_dim(r, K::Ricci, 4)));
      bool fam = rb && span_equal(rb->basis, reference::ricci_family(r.id, lam(r)));
      add(8, "ricci-family-span/" + t, "span of the closed-form family",
          fam ? "equal spans" : "spans differ", pass_if(fam));
      bool kil = rb && kb && span_equal(rb->basis, kb->basis);
      add(8, "ricci-equals-killing/" + t, "Ricci = Killing",
          kil ? "equal spans" : "spans differ", pass_if(kil));
      bool cur = rb && cb && span_equal(rb->basis, cb->basis);
      add(8, "curvature-equals-ricci/" + t, "curvature = Ricci",
          cur ? "equal spans" : "spans differ", pass_if(cur));
    } else {
      for (K k : {K::Ricci, K::Curvature}) {
        std::vector<int> dims;
        for (int d = 0; d <= 2; ++d)
          dims.push_back(nullspace(r.geo, assemble_system(r.geo, k, d)).dimension);
        add(8, kind_name(k) + "-degenerate/" + t, "dims 3 12 30",
            "dims " + join_ints(dims), pass_if(dims == std::vector<int>{3, 12, 30}));
      }
    }

    {
      auto* tb = space(r, K::Matter);
      auto* kb = space(r, K::Killing);
      bool ok = tb && kb && !tb->degenerate && span_equal(tb->basis, kb->basis);
      std::string comp = describe(r, K::Matter);
      if (tb && !tb->degenerate) comp += ok ? "; equal to Killing" : "; differs from Killing";
      add(9, "matter-equals-killing/" + t,
          "matter = Killing, dimension " + std::to_string(kdim), comp,
          pass_if(ok));
    }
  }

  void lambda_independence() {
    for (ModelId id : {ModelId::G0, ModelId::G1, ModelId::G2})
      for (SymmetryKind k : kAllKinds) {
        std::vector<int> dims;
        for (const auto& r : runs_)
          if (r.id == id) {
            auto* b = space(r, k);
            dims.push_back(b ? b->dimension : -1);
          }
        bool same = true;
        for (int d : dims) same = same && d == dims.front() && d >= 0;
        add(k == SymmetryKind::Killing ? 5 : k == SymmetryKind::Affine ? 6
            : k == SymmetryKind::Matter ? 9 : 8,
            kind_name(k) + "-lambda-independent/" + model_name(id),
            "same dimension for every lambda", "dimensions " + join_ints(dims),
            pass_if(same));
      }
  }

  // Criterion 10.
  void closure(const ModelRun& r) {
    for (SymmetryKind k : kAllKinds) {
      const std::string claim = "closure/" + kind_name(k) + "/" + tag(r.id, r.lambda);
      auto* b = space(r, k);
      if (!b) {
        add(10, claim, "closed", describe(r, k), Verdict::Fail);
        continue;
      }
      if (b->degenerate) {
        add(10, claim, "closed",
            "operator vanishes identically: every vector field qualifies; the "
            "truncated ansatz is not itself bracket-closed",
            Verdict::EvidenceOnly);
        continue;
      }
      AlgebraReport a = closure_check(r.geo.model, b->basis);
      std::string comp = "dimension " + std::to_string(a.dimension) +
                         (a.closed ? ", closed" : ", not closed") +
                         (a.jacobi ? ", Jacobi holds" : ", Jacobi fails") +
                         ", derived series " + join_ints(a.derived_series);
      add(10, claim, "closed, Jacobi holds", comp,
          pass_if(a.closed && a.jacobi && a.antisymmetric));
    }
  }

  // Criteria 11-12.
  void causal(const ModelRun& r) {
    if (r.id != ModelId::G1 && r.id != ModelId::G2) return;
    const std::string t = tag(r.id, r.lambda);
    const auto& m = r.geo.model;
    const auto grid = default_grid();
    auto basis = printed_killing_frame(m, lam(r));
    for (const auto& nf : reference::printed_norms(r.id, lam(r))) {
      Poly got = norm_squared(m, basis[nf.index - 1]);
      add(11, "norm/X" + std::to_string(nf.index) + "/" + t,
          nf.value.to_string(), got.to_string(), pass_if(got == nf.value));
    }
    auto definite = [&](int k, CausalClass want) {
      auto rep = classify(m, basis[k - 1], grid);
      std::string comp = causal_name(rep.classification) + ", norm " +
                         rep.norm_squared.to_string() +
                         (rep.certified ? ", certified" : ", grid only");
      add(11, causal_name(want) + "/X" + std::to_string(k) + "/" + t,
          causal_name(want), comp,
          rep.classification == want
              ? (rep.certified ? Verdict::Pass : Verdict::EvidenceOnly)
              : Verdict::Fail);
    };
    if (r.id == ModelId::G1) {
      definite(3, CausalClass::Spacelike);
      definite(4, CausalClass::Spacelike);
    } else {
      definite(4, CausalClass::Timelike);
    }

    auto s = scan_combinations(m, basis, default_coefficient_grid(4), grid);
    const bool g1 = r.id == ModelId::G1;
    const CausalClass banned = g1 ? CausalClass::Timelike : CausalClass::Spacelike;
    std::ostringstream comp;
    comp << s.total << " combinations:";
    for (const auto& [c, n] : s.counts) comp << " " << causal_name(c) << "=" << n;
    comp << " (evidence on grid)";
    // A null combination would be an exact counterexample; a definite sign
    // on the grid is only evidence against the claim.
    const bool contradicted = s.count(CausalClass::Null) > 0 || s.count(banned) > 0;
    add(12, "causal-scan/" + t,
        std::string("no ") + causal_name(banned) + " or null combination",
        comp.str(), contradicted ? Verdict::Fail : Verdict::EvidenceOnly);
  }

  // Criterion 13, displays.
  void displays() {
    for (const auto& l : opt_.lambdas) {
      std::map<ModelId, Geometry> geos;
      for (ModelId id : {ModelId::G0, ModelId::G1, ModelId::G2})
        geos.emplace(id, derive_geometry(build_model(id, l)));
      for (const auto& d : reference::tensor_displays(l)) {
        auto c = check_display(geos.at(d.model), d, opt_.display_degree);
        const std::string claim = "display/" + model_name(d.model) + "/" +
                                  kind_name(d.kind) + "/(" + std::to_string(d.i) +
                                  "," + std::to_string(d.j) + ")/lambda=" +
                                  to_string(l);
        add(13, claim, "printed expression",
            c.matches ? "equal on every monomial field up to degree " +
                            std::to_string(opt_.display_degree)
                      : "differs, e.g. on " + c.counterexample,
            pass_if(c.matches));
      }
    }
  }

  void affine_systems() {
    for (const auto& r : runs_) {
      auto sys = compare_printed_affine_system(r.geo, opt_.display_degree);
      std::string comp = "printed kernel dimension " +
                         std::to_string(sys.printed_kernel_dimension) +
                         ", computed " + std::to_string(sys.computed_kernel_dimension) +
                         (sys.same_solution_space ? ", same solutions" : ", different solutions");
      auto bad = sys.discrepancies();
      comp += bad.empty() ? "; every equation matches" : "; discrepant equations " + join_ints(bad);
      add(13, "printed-affine-system/" + tag(r.id, r.lambda),
          "report of differences from the affine operator", comp,
          Verdict::EvidenceOnly);
      rep_.affine_systems.push_back(std::move(sys));
    }
  }
};

std::string field_text(const FrameVectorField& X) {
  return "(" + X.f[0].to_string() + ", " + X.f[1].to_string() + ", " +
         X.f[2].to_string() + ")";
}

}  // namespace

DisplayCheck check_display(const Geometry& geo,
                           const reference::ComponentDisplay& display,
                           int degree) {
  const auto& S = display.kind == SymmetryKind::Ricci ? geo.ricci.rho
                                                      : geo.ricci.matter;
  Ansatz a = Ansatz::of_degree(degree);
  DisplayCheck out{display, true, {}};
  // Lowest degree first so the reported counterexample is as small as possible.
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
    return a.unknowns[p].mono.degree() < a.unknowns[q].mono.degree();
  });
  for (int k : order) {
    FrameVectorField B = a.basis_field(k);
    Poly got = sym2_lie_derivative(geo, S, B).at(display.i - 1, display.j - 1);
    if (got != display.op.apply(B)) {
      out.matches = false;
      out.counterexample = field_text(B);
      break;
    }
  }
  return out;
}

PrintedSystemCheck compare_printed_affine_system(const Geometry& geo,
                                                 int degree) {
  const ModelId id = geo.model.id;
  const Rational l = geo.model.lambda.value_or(Rational(1));
  const auto printed = reference::printed_affine_system(id, l);
  PrintedSystemCheck out;
  out.model = id;
  out.lambda = l;
  out.degree = degree;

  Ansatz a = Ansatz::of_degree(degree);
  const int n = a.size();
  std::vector<std::vector<OperatorComponent>> comps(n);
  std::vector<std::vector<Poly>> evals(printed.size(), std::vector<Poly>(n));
  for (int k = 0; k < n; ++k) {
    FrameVectorField B = a.basis_field(k);
    comps[k] = operator_components(geo, SymmetryKind::Affine, B);
    for (std::size_t e = 0; e < printed.size(); ++e) evals[e][k] = printed[e].apply(B);
  }

  SolutionBasis computed =
      nullspace(geo, assemble_system(geo, SymmetryKind::Affine, degree));
  out.computed_kernel_dimension = computed.dimension;

  std::map<std::pair<int, Monomial>, SparseRow> rows;
  for (std::size_t e = 0; e < printed.size(); ++e) {
    PrintedEquationCheck chk;
    chk.index = static_cast<int>(e) + 1;
    chk.holds_on_solutions = true;
    for (const auto& X : computed.basis)
      if (!printed[e].apply(X).is_zero()) {
        chk.holds_on_solutions = false;
        break;
      }
    for (std::size_t c = 0; c < comps[0].size() && !chk.component; ++c) {
      std::optional<Rational> ratio;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        const Poly& p = evals[e][k];
        const Poly& q = comps[k][c].value;
        if (p.is_zero() && q.is_zero()) continue;
        if (p.is_zero() || q.is_zero()) {
          ok = false;
          break;
        }
        if (!ratio) ratio = p.terms().begin()->second / q.terms().begin()->second;
        Poly scaled = q;
        scaled.scale(*ratio);
        ok = scaled == p;
      }
      if (ok && ratio) {
        chk.component = comps[0][c].label;
        chk.factor = *ratio;
      }
    }
    out.equations.push_back(std::move(chk));
    for (int k = 0; k < n; ++k)
      for (const auto& [m, v] : evals[e][k].terms())
        rows[{static_cast<int>(e), m}].emplace_back(k, v);
  }
  std::vector<SparseRow> matrix;
  for (auto& [key, row] : rows) matrix.push_back(std::move(row));
  auto kernel = matrix_kernel(matrix, n);
  out.printed_kernel_dimension = static_cast<int>(kernel.size());
  std::vector<FrameVectorField> printed_solutions;
  for (const auto& v : kernel) printed_solutions.push_back(a.field_from(v));
  out.same_solution_space = span_equal(printed_solutions, computed.basis);
  return out;
}

AuditReport run_audit(const AuditOptions& options) {
  AuditReport rep;
  rep.lambdas = options.lambdas;
  Auditor(options, rep).run();
  return rep;
}

}  // namespace heis
