#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "oracles.hpp"

#include "heis/nullspace.hpp"

using namespace heis;

namespace {

// Plain dense Gaussian elimination over Q.
int dense_rank(std::vector<DenseVector> m) {
  int r = 0;
  const int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<SparseRow> random_matrix(std::mt19937& rng, int rows, int cols,
                                     int rank_cap) {
  // Product of rows x rank_cap and rank_cap x cols factors: rank <= rank_cap.
  std::uniform_int_distribution<int> v(-3, 3), d(1, 4);
  std::vector<DenseVector> A(rows, DenseVector(rank_cap)), B(rank_cap, DenseVector(cols));
  for (auto& r : A)
    for (auto& e : r) e = Rational(v(rng), d(rng)), e.canonicalize();
  for (auto& r : B)
    for (auto& e : r) e = Rational(v(rng), d(rng)), e.canonicalize();
  std::vector<SparseRow> out;
  for (int i = 0; i < rows; ++i) {
    DenseVector row(cols);
    for (int j = 0; j < cols; ++j)
      for (int k = 0; k < rank_cap; ++k) row[j] += A[i][k] * B[k][j];
    out.push_back(to_sparse(row));
  }
  return out;
}

Rational dot(const SparseRow& a, const SparseRow& b) {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (a[i].first > b[j].first) ++j;
    else s += a[i++].second * b[j++].second;
  }
  return s;
}

Geometry geometry(ModelId id, const Rational& l) {
  return derive_geometry(oracle::build(id, l));
}

}  // namespace

TEST_CASE("sparse and dense conversions") {
  DenseVector v{0, Rational(1, 2), 0, -3};
  SparseRow r = to_sparse(v);
  REQUIRE(r.size() == 2);
  CHECK(r[0].first == 1);
  CHECK(r[1].second == -3);
  CHECK(to_dense(r, 4) == v);
}

TEST_CASE("rank, kernel and RREF agree with dense elimination") {
  std::mt19937 rng(53);
  for (int t = 0; t < 40; ++t) {
    int rows = 2 + t % 7, cols = 3 + (t * 5) % 9, cap = 1 + t % 5;
    auto M = random_matrix(rng, rows, cols, cap);
    std::vector<DenseVector> dense;
    for (const auto& r : M) dense.push_back(to_dense(r, cols));
    const int r = dense_rank(dense);
    CHECK(rank(M, cols) == r);
    auto mod = rank_mod_prime(M, cols);
    REQUIRE(mod.has_value());
    CHECK(*mod == r);
    auto K = kernel_basis(M, cols);
    CHECK(static_cast<int>(K.size()) == cols - r);
    for (const auto& k : K)
      for (const auto& row : M) CHECK(dot(k, row) == 0);
    auto R = rref(M, cols);
    CHECK(static_cast<int>(R.size()) == r);
    for (std::size_t i = 0; i < R.size(); ++i) {
      CHECK(R[i].front().second == 1);
      if (i) CHECK(R[i - 1].front().first < R[i].front().first);
      for (std::size_t j = 0; j < R.size(); ++j)
        if (j != i)
          for (const auto& [c, val] : R[j]) CHECK(c != R[i].front().first);
    }
    CHECK(matrix_kernel(M, cols) == K);
  }
}

TEST_CASE("fraction-free echelon reports independence") {
  FractionFreeEchelon e(3);
  CHECK(e.add_row({{0, 2}, {1, 4}}));
  CHECK_FALSE(e.add_row({{0, Rational(1, 3)}, {1, Rational(2, 3)}}));
  CHECK(e.add_row({{2, 5}}));
  CHECK_FALSE(e.add_row({}));
  CHECK(e.rank() == 2);
  auto R = e.reduced();
  REQUIRE(R.size() == 2);
  CHECK(R[0] == SparseRow{{0, 1}, {1, 2}});
  CHECK(R[1] == SparseRow{{2, 1}});
}

TEST_CASE("solve_combination") {
  std::vector<SparseRow> V{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}};
  auto c = solve_combination(V, {{0, 2}, {1, 5}, {2, 3}}, 3);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK_FALSE(solve_combination(V, {{2, 1}}, 3).has_value());
}

TEST_CASE("ansatz sizes") {
  CHECK(ansatz_size(0) == 3);
  CHECK(ansatz_size(1) == 12);
  CHECK(ansatz_size(2) == 30);
  for (int d = 0; d <= 6; ++d) CHECK(Ansatz::of_degree(d).size() == ansatz_size(d));
  Ansatz a = Ansatz::of_degree(1);
  CHECK(a.unknowns.front().component == 0);
  CHECK(a.unknowns.front().mono == Monomial(1, 0, 0));
  CHECK(a.basis_field(4).f[1] == Poly::var(Var::X));
}

TEST_CASE("Killing dimensions") {
  for (ModelId id : {ModelId::G0, ModelId::G1, ModelId::G2})
    for (const auto& l : {Rational(1), Rational(2), Rational(1, 2)}) {
      CAPTURE(model_name(id));
      CAPTURE(to_string(l));
      auto s = stabilized_dimension(geometry(id, l), SymmetryKind::Killing);
      CHECK(s.dimension == 4);
      CHECK(s.stabilized);
      CHECK_FALSE(s.degenerate);
      CHECK(s.degree == 2);
    }
  auto g3 = stabilized_dimension(geometry(ModelId::G3, 0), SymmetryKind::Killing);
  CHECK(g3.dimension == 6);
  CHECK(g3.stabilized);
}

TEST_CASE("affine dimensions and stabilization degrees") {
  for (ModelId id : {ModelId::G0, ModelId::G1, ModelId::G2}) {
    auto s = stabilized_dimension(geometry(id, 2), SymmetryKind::Affine);
    CHECK(s.dimension == 4);
    CHECK(s.degree <= 2);
  }
  auto g3 = stabilized_dimension(geometry(ModelId::G3, 0), SymmetryKind::Affine);
  CHECK(g3.dimension == 12);
  CHECK(g3.degree <= 5);
  CHECK(g3.stabilized);
  CHECK_THROWS_AS(stabilized_dimension(geometry(ModelId::G3, 0), SymmetryKind::Affine, 2),
                  StabilizationError);
  CHECK_THROWS_AS(stabilized_dimension(geometry(ModelId::G0, 1), SymmetryKind::Affine, 0),
                  std::invalid_argument);
}

TEST_CASE("flat g3 makes the Ricci and curvature operators vanish") {
  Geometry g3 = geometry(ModelId::G3, 0);
  for (SymmetryKind k : {SymmetryKind::Ricci, SymmetryKind::Curvature, SymmetryKind::Matter}) {
    auto s = stabilized_dimension(g3, k, 2);
    CHECK(s.degenerate);
    CHECK_FALSE(s.stabilized);
    CHECK(s.dimension_by_degree == std::vector<int>{3, 12, 30});
  }
}

TEST_CASE("every kernel vector is a symmetry") {
  for (ModelId id : kAllModels)
    for (SymmetryKind k : {SymmetryKind::Killing, SymmetryKind::Affine, SymmetryKind::Ricci}) {
      Geometry geo = geometry(id, Rational(1, 2));
      for (int d = 0; d <= 2; ++d) {
        auto s = nullspace(geo, assemble_system(geo, k, d));
        CHECK(static_cast<int>(s.basis.size()) == s.dimension);
        for (const auto& X : s.basis) CHECK(is_symmetry(geo, k, X));
      }
    }
}

TEST_CASE("assembled rows are coefficient equations of the operator") {
  std::mt19937 rng(59);
  Geometry geo = geometry(ModelId::G1, 2);
  for (SymmetryKind k : kAllKinds) {
    auto sys = assemble_system(geo, k, 2);
    REQUIRE(sys.rows.size() == sys.labels.size());
    // A random ansatz field: each row applied to its coefficients gives the
    // coefficient of the labelled monomial in the labelled component.
    DenseVector c(sys.ncols());
    std::uniform_int_distribution<int> v(-3, 3);
    for (auto& e : c) e = v(rng);
    FrameVectorField X = sys.ansatz.field_from(to_sparse(c));
    auto comps = operator_components(geo, k, X);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      Rational lhs = dot(sys.rows[r], to_sparse(c));
      Poly val;
      for (const auto& oc : comps)
        if (oc.label == sys.labels[r].component) val = oc.value;
      CHECK(lhs == val.coefficient(sys.labels[r].mono));
    }
  }
}

TEST_CASE("solutions are deterministic and in reduced form") {
  Geometry geo = geometry(ModelId::G2, Rational(1, 2));
  auto a = stabilized_dimension(geo, SymmetryKind::Killing);
  auto b = stabilized_dimension(geo, SymmetryKind::Killing);
  CHECK(a.basis == b.basis);
  CHECK(a.dimension_by_degree == b.dimension_by_degree);
}
