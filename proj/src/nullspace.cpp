#include "heis/nullspace.hpp"

#include <map>

namespace heis {

Ansatz Ansatz::of_degree(int d) {
  Ansatz a;
  a.degree = d;
  const auto monos = monomials_up_to(d);
  for (int c = 0; c < 3; ++c)
    for (const auto& m : monos) a.unknowns.push_back({c, m});
  return a;
}

FrameVectorField Ansatz::basis_field(int k) const {
  FrameVectorField X;
  X.f[unknowns[k].component] = Poly::term(unknowns[k].mono, 1);
  return X;
}

FrameVectorField Ansatz::field_from(const SparseRow& coeffs) const {
  FrameVectorField X;
  for (const auto& [k, c] : coeffs)
    X.f[unknowns[k].component].add_term(unknowns[k].mono, c);
  return X;
}

int ansatz_size(int d) { return (d + 3) * (d + 2) * (d + 1) / 2; }

LinearSystem assemble_system(const Geometry& geo, SymmetryKind kind,
                             int degree) {
  LinearSystem sys{geo.model.id, kind, Ansatz::of_degree(degree), {}, {}};
  // (component index, monomial) -> row
  std::map<std::pair<int, Monomial>, SparseRow> rows;
  std::vector<std::string> names;
  for (int k = 0; k < sys.ansatz.size(); ++k) {
    auto comps = operator_components(geo, kind, sys.ansatz.basis_field(k));
    if (names.empty())
      for (const auto& c : comps) names.push_back(c.label);
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
      for (const auto& [m, c] : comps[ci].value.terms())
        rows[{ci, m}].emplace_back(k, c);  // columns arrive in order
  }
  for (auto& [key, row] : rows) {
    sys.labels.push_back({names[key.first], key.second});
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::vector<SparseRow> matrix_kernel(const std::vector<SparseRow>& rows,
                                     int ncols) {
  return kernel_basis(rows, ncols);
}

SolutionBasis nullspace(const Geometry& geo, const LinearSystem& sys) {
  const int n = sys.ncols();
  const int r = rank(sys.rows, n);
  auto modular = rank_mod_prime(sys.rows, n);
  if (modular && *modular != r)
    throw SolverError("rank mismatch: rational " + std::to_string(r) +
                      ", modular " + std::to_string(*modular));

  auto kernel = matrix_kernel(sys.rows, n);
  SolutionBasis out;
  out.model = sys.model;
  out.kind = sys.kind;
  out.degree = sys.ansatz.degree;
  out.dimension = static_cast<int>(kernel.size());
  if (out.dimension != n - r)
    throw SolverError("kernel size disagrees with rank");
  for (const auto& v : kernel) {
    FrameVectorField X = sys.ansatz.field_from(v);
    if (!is_symmetry(geo, sys.kind, X))
      throw SolverError("kernel vector fails substitution for " +
                        kind_name(sys.kind) + " on " +
                        model_name(sys.model));
    out.basis.push_back(std::move(X));
  }
  return out;
}

SolutionBasis stabilized_dimension(const Geometry& geo, SymmetryKind kind,
                                   int d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  std::vector<SolutionBasis> by_degree;
  std::vector<int> dims;
  bool full_everywhere = true;
  for (int d = 0; d <= d_max; ++d) {
    by_degree.push_back(nullspace(geo, assemble_system(geo, kind, d)));
    dims.push_back(by_degree.back().dimension);
    if (dims.back() != ansatz_size(d)) full_everywhere = false;
    if (!full_everywhere && d >= 1 && dims[d] == dims[d - 1]) {
      SolutionBasis out = std::move(by_degree[d - 1]);
      out.stabilized = true;
      out.dimension_by_degree = dims;
      return out;
    }
  }
  if (full_everywhere) {
    SolutionBasis out = std::move(by_degree.back());
    out.stabilized = false;
    out.degenerate = true;
    out.dimension_by_degree = dims;
    return out;
  }
  std::string trail;
  for (int v : dims) trail += (trail.empty() ? "" : ", ") + std::to_string(v);
  throw StabilizationError(kind_name(kind) + " on " + model_name(geo.model.id) +
                           " did not stabilize by degree " +
                           std::to_string(d_max) + " (dimensions " + trail +
                           ")");
}

}  // namespace heis
