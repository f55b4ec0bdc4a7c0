#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "oracles.hpp"

#include "heis/causal.hpp"
#include "heis/reference.hpp"

using namespace heis;

namespace {

const Poly x = Poly::var(Var::X);
const Poly y = Poly::var(Var::Y);

std::vector<FrameVectorField> killing_frame_basis(const MetricModel& m) {
  std::vector<FrameVectorField> out;
  for (const auto& v : reference::killing_basis(m.id, *m.lambda))
    out.push_back(coord_to_frame(m, v));
  return out;
}

}  // namespace

TEST_CASE("certified signs") {
  CHECK(certified_sign(Poly(1) + x * x) == 1);
  CHECK(certified_sign(Poly(-1) - Poly(2) * x * x * y * y) == -1);
  CHECK(certified_sign(x * x) == 0);
  CHECK(certified_sign(Poly(1) - x * x) == 0);
  CHECK(certified_sign(Poly(1) + x) == 0);
  CHECK(certified_sign(Poly()) == 0);
}

TEST_CASE("norm agrees with the coordinate metric") {
  std::mt19937 rng(61);
  for (ModelId id : {ModelId::G1, ModelId::G2, ModelId::G3}) {
    Rational l(2);
    MetricModel m = oracle::build(id, l);
    oracle::CoordGeometry cg(id, l);
    for (int t = 0; t < 10; ++t) {
      FrameVectorField X = oracle::random_field(rng, 2, 3);
      auto v = cg.to_coord(X.f);
      Poly n;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) n += cg.g[a][b] * v[a] * v[b];
      CHECK(norm_squared(m, X) == n);
    }
  }
  CHECK_THROWS_AS(norm_squared(build_model(ModelId::G0, Rational(1)),
                               FrameVectorField::unit(0)),
                  std::invalid_argument);
}

TEST_CASE("printed norm formulas") {
  for (ModelId id : {ModelId::G1, ModelId::G2})
    for (const auto& l : {Rational(1), Rational(2), Rational(1, 2), Rational(-3)}) {
      CAPTURE(model_name(id));
      CAPTURE(to_string(l));
      MetricModel m = build_model(id, l);
      auto B = killing_frame_basis(m);
      auto printed = reference::printed_norms(id, l);
      CHECK(printed.size() == (id == ModelId::G1 ? 2u : 3u));
      for (const auto& f : printed) CHECK(norm_squared(m, B[f.index - 1]) == f.value);
    }
}

TEST_CASE("basis fields with a definite sign") {
  auto grid = default_grid();
  MetricModel g1 = build_model(ModelId::G1, Rational(2));
  auto B1 = killing_frame_basis(g1);
  for (int k : {2, 3}) {
    auto r = classify(g1, B1[k], grid);
    CHECK(r.classification == CausalClass::Spacelike);
    CHECK(r.certified);
  }
  // The ∂y field on g1 has norm x^2 + 1.
  CHECK(norm_squared(g1, B1[2]) == x * x + Poly(1));
  MetricModel g2 = build_model(ModelId::G2, Rational(2));
  auto r = classify(g2, killing_frame_basis(g2)[3], grid);
  CHECK(r.norm_squared == Poly(-1));
  CHECK(r.classification == CausalClass::Timelike);
  CHECK(r.certified);
}

TEST_CASE("classification outcomes") {
  auto grid = default_grid();
  MetricModel g1 = build_model(ModelId::G1, Rational(1));
  CHECK(classify(g1, FrameVectorField{}, grid).classification == CausalClass::Zero);
  auto null = classify(g1, {{Poly(1), Poly(), Poly(1)}}, grid);
  CHECK(null.classification == CausalClass::Null);
  auto mixed = classify(g1, {{x, Poly(), Poly(1)}}, grid);
  CHECK(mixed.classification == CausalClass::SignChanging);
  REQUIRE(mixed.witnesses.size() == 2);
  CHECK(mixed.witnesses[0].sign == 1);
  CHECK(mixed.witnesses[1].sign == -1);
  auto weak = classify(g1, {{x, Poly(), Poly()}}, grid);
  CHECK(weak.classification == CausalClass::InconclusiveOnGrid);
  CHECK(weak.witnesses.size() == 1 + 25);
  // (xy + 11)^2 - 1 is positive on the grid but negative near xy = -11.
  auto grid_only = classify(g1, {{x * y + Poly(11), Poly(), Poly(1)}}, grid);
  CHECK(grid_only.classification == CausalClass::Spacelike);
  CHECK_FALSE(grid_only.certified);
  CHECK_THROWS_AS(classify(g1, FrameVectorField::unit(0), {}), std::invalid_argument);
}

TEST_CASE("sample grids") {
  auto g = default_grid();
  CHECK(g.size() == 125);
  CHECK(g.front().x == -3);
  CHECK(g.back().z == 3);
  auto c = default_coefficient_grid(4);
  CHECK(c.size() == 624);
  CHECK(c.front() == std::vector<Rational>(4, Rational(-2)));
  CHECK(c.back() == std::vector<Rational>(4, Rational(2)));
  CHECK(c[1] == std::vector<Rational>{-2, -2, -2, -1});
}

TEST_CASE("coefficient scans over the Killing bases") {
  auto grid = default_grid();
  for (const auto& l : {Rational(1), Rational(2), Rational(1, 2)}) {
    MetricModel g1 = build_model(ModelId::G1, l);
    auto s1 = scan_combinations(g1, killing_frame_basis(g1), default_coefficient_grid(4), grid);
    CHECK(s1.total == 624);
    CHECK(s1.count(CausalClass::Timelike) == 0);
    CHECK(s1.count(CausalClass::Null) == 0);
    MetricModel g2 = build_model(ModelId::G2, l);
    auto s2 = scan_combinations(g2, killing_frame_basis(g2), default_coefficient_grid(4), grid);
    CHECK(s2.count(CausalClass::Spacelike) == 0);
    CHECK(s2.count(CausalClass::Null) == 0);
  }
  MetricModel g1 = build_model(ModelId::G1, 1);
  CHECK_THROWS_AS(scan_combinations(g1, killing_frame_basis(g1), {{1, 2}}, grid),
                  std::invalid_argument);
}

TEST_CASE("class names") {
  CHECK(causal_name(CausalClass::SignChanging) == "sign-changing");
  CHECK(causal_name(CausalClass::InconclusiveOnGrid) == "inconclusive-on-grid");
}
