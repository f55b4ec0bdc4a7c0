#include "heis/algebra.hpp"

#include <algorithm>

namespace heis {

FieldCoordinates::FieldCoordinates(const std::vector<FrameVectorField>& fields) {
  for (const auto& X : fields) extend(X);
}

void FieldCoordinates::extend(const FrameVectorField& X) {
  for (int c = 0; c < 3; ++c)
    for (const auto& [m, v] : X.f[c].terms())
      columns_.emplace(std::make_pair(c, m), static_cast<int>(columns_.size()));
}

SparseRow FieldCoordinates::row(const FrameVectorField& X) const {
  SparseRow r;
  for (int c = 0; c < 3; ++c)
    for (const auto& [m, v] : X.f[c].terms())
      r.emplace_back(columns_.at({c, m}), v);
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

int field_rank(const std::vector<FrameVectorField>& fields) {
  FieldCoordinates coords(fields);
  std::vector<SparseRow> rows;
  for (const auto& X : fields) rows.push_back(coords.row(X));
  return rank(rows, coords.ncols());
}

bool span_contains(const std::vector<FrameVectorField>& A,
                   const std::vector<FrameVectorField>& B) {
  std::vector<FrameVectorField> all = A;
  all.insert(all.end(), B.begin(), B.end());
  FieldCoordinates coords(all);
  std::vector<SparseRow> rows;
  for (const auto& X : A) rows.push_back(coords.row(X));
  const int base = rank(rows, coords.ncols());
  for (const auto& X : B) rows.push_back(coords.row(X));
  return rank(rows, coords.ncols()) == base;
}

bool span_equal(const std::vector<FrameVectorField>& A,
                const std::vector<FrameVectorField>& B) {
  return span_contains(A, B) && span_contains(B, A);
}

bool satisfies_jacobi(
    const std::vector<std::vector<std::vector<Rational>>>& c) {
  const int n = static_cast<int>(c.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int e = b + 1; e < n; ++e)
        for (int out = 0; out < n; ++out) {
          // [[a,b],e] + [[b,e],a] + [[e,a],b]
          Rational s = 0;
          for (int d = 0; d < n; ++d) {
            if (c[a][b][d] != 0) s += c[a][b][d] * c[d][e][out];
            if (c[b][e][d] != 0) s += c[b][e][d] * c[d][a][out];
            if (c[e][a][d] != 0) s += c[e][a][d] * c[d][b][out];
          }
          if (s != 0) return false;
        }
  return true;
}

namespace {

/// Dimensions of the derived series computed in basis coordinates.
std::vector<int> derived_series(
    const std::vector<std::vector<std::vector<Rational>>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<SparseRow> current;
  for (int a = 0; a < n; ++a) current.push_back({{a, Rational(1)}});
  std::vector<int> dims{n};
  while (!current.empty()) {
    std::vector<SparseRow> brackets;
    for (std::size_t p = 0; p < current.size(); ++p)
      for (std::size_t q = p + 1; q < current.size(); ++q) {
        DenseVector v(n, Rational(0));
        for (const auto& [a, ua] : current[p])
          for (const auto& [b, vb] : current[q])
            for (int d = 0; d < n; ++d)
              if (c[a][b][d] != 0) v[d] += ua * vb * c[a][b][d];
        auto s = to_sparse(v);
        if (!s.empty()) brackets.push_back(std::move(s));
      }
    auto next = rref(brackets, n);
    if (static_cast<int>(next.size()) == dims.back()) break;
    dims.push_back(static_cast<int>(next.size()));
    current = std::move(next);
  }
  return dims;
}

}  // namespace

AlgebraReport closure_check(const MetricModel& model,
                            const std::vector<FrameVectorField>& basis) {
  const int n = static_cast<int>(basis.size());
  if (field_rank(basis) != n)
    throw AlgebraError("basis is linearly dependent");

  std::vector<std::vector<FrameVectorField>> br(n, std::vector<FrameVectorField>(n));
  std::vector<FrameVectorField> all = basis;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      br[a][b] = lie_bracket(model, basis[a], basis[b]);
      all.push_back(br[a][b]);
    }
  FieldCoordinates coords(all);
  std::vector<SparseRow> vectors;
  for (const auto& X : basis) vectors.push_back(coords.row(X));

  AlgebraReport rep;
  rep.dimension = n;
  rep.structure_constants.assign(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
  rep.closed = true;
  for (int a = 0; a < n && rep.closed; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto sol = solve_combination(vectors, coords.row(br[a][b]), coords.ncols());
      if (!sol) {
        rep.closed = false;
        rep.open_pair = {a, b};
        break;
      }
      for (int d = 0; d < n; ++d) {
        rep.structure_constants[a][b][d] = (*sol)[d];
        rep.structure_constants[b][a][d] = -(*sol)[d];
      }
    }
  if (!rep.closed) return rep;

  // Antisymmetry is re-checked on independently computed reversed brackets.
  rep.antisymmetric = true;
  for (int a = 0; a < n && rep.antisymmetric; ++a) {
    if (!lie_bracket(model, basis[a], basis[a]).is_zero())
      rep.antisymmetric = false;
    for (int b = a + 1; b < n; ++b)
      if (!(lie_bracket(model, basis[b], basis[a]) + br[a][b]).is_zero()) {
        rep.antisymmetric = false;
        break;
      }
  }
  rep.jacobi = satisfies_jacobi(rep.structure_constants);
  rep.derived_series = derived_series(rep.structure_constants);
  return rep;
}

bool CollineationComparison::equal(SymmetryKind a, SymmetryKind b) const {
  int ia = -1, ib = -1;
  for (int i = 0; i < static_cast<int>(kinds.size()); ++i) {
    if (kinds[i] == a) ia = i;
    if (kinds[i] == b) ib = i;
  }
  return contains[ia][ib] && contains[ib][ia];
}

const SolutionBasis& CollineationComparison::space(SymmetryKind k) const {
  for (std::size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == k) return spaces[i];
  throw std::out_of_range("kind not compared");
}

CollineationComparison compare_collineation_spaces(const Geometry& geo,
                                                   int d_max) {
  CollineationComparison out;
  out.model = geo.model.id;
  out.kinds = {SymmetryKind::Killing, SymmetryKind::Affine, SymmetryKind::Ricci,
               SymmetryKind::Curvature, SymmetryKind::Matter};
  for (auto k : out.kinds) out.spaces.push_back(stabilized_dimension(geo, k, d_max));
  const std::size_t n = out.kinds.size();
  out.contains.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.contains[a][b] =
          a == b || span_contains(out.spaces[a].basis, out.spaces[b].basis);
  return out;
}

}  // namespace heis
