#include "heis/reference.hpp"

#include <array>
#include <map>

namespace heis::reference {

namespace {

const Poly& X() {
  static const Poly p = Poly::var(Var::X);
  return p;
}
const Poly& Y() {
  static const Poly p = Poly::var(Var::Y);
  return p;
}
const Poly& Z() {
  static const Poly p = Poly::var(Var::Z);
  return p;
}

Poly q(long n, long d = 1) { return Poly(Rational(n, d)); }

DiffOp f(int c, std::string_view vars = "") { return DiffOp::d(c, vars); }

/// Constants c_1..c_13, indexed from 1.
using Consts = std::array<Rational, 14>;

template <typename Family>
std::vector<FrameVectorField> units(Family family,
                                    const std::vector<int>& free) {
  std::vector<FrameVectorField> out;
  for (int i : free) {
    Consts c;
    c.fill(0);
    c[i] = 1;
    out.push_back(family(c));
  }
  return out;
}

}  // namespace

std::vector<PrintedBracket> printed_brackets(ModelId id,
                                             const Rational& lambda) {
  switch (id) {
    case ModelId::G0:
    case ModelId::G2:
      return {{1, 2, {0, 0, lambda}}, {1, 3, {0, 0, 0}}, {2, 3, {0, 0, 0}}};
    case ModelId::G1:
      return {{2, 3, {lambda, 0, 0}}, {1, 2, {0, 0, 0}}, {1, 3, {0, 0, 0}}};
    case ModelId::G3:
      return {{2, 3, {0, 0, 0}}, {2, 1, {0, 1, -1}}, {3, 1, {0, 1, -1}}};
  }
  return {};
}

Rational3 printed_connection(ModelId id, const Rational& lambda) {
  Rational3 g;
  for (auto& a : g)
    for (auto& b : a) b.fill(0);
  const Rational h = lambda / 2;
  // set(i, j, k, v): nabla_{e_i} e_j has e_k component v (1-based).
  auto set = [&](int i, int j, int k, const Rational& v) {
    g[i - 1][j - 1][k - 1] = v;
  };
  switch (id) {
    case ModelId::G0:
      set(1, 2, 3, h), set(2, 1, 3, -h);
      set(1, 3, 2, -h), set(3, 1, 2, -h);
      set(2, 3, 1, h), set(3, 2, 1, h);
      break;
    case ModelId::G1:
      set(1, 2, 3, h), set(2, 1, 3, h);
      set(1, 3, 2, h), set(3, 1, 2, h);
      set(2, 3, 1, h), set(3, 2, 1, -h);
      break;
    case ModelId::G2:
      set(1, 2, 3, h), set(2, 1, 3, -h);
      set(1, 3, 2, h), set(3, 1, 2, h);
      set(2, 3, 1, -h), set(3, 2, 1, -h);
      break;
    case ModelId::G3:
      for (int i : {2, 3}) set(i, 1, 2, 1), set(i, 1, 3, -1);
      for (int i : {2, 3})
        for (int j : {2, 3}) set(i, j, 1, -1);
      break;
  }
  return g;
}

std::vector<PrintedCurvature> printed_curvature(ModelId id,
                                                const Rational& lambda) {
  const Rational q4 = lambda * lambda / 4, t4 = 3 * q4;
  switch (id) {
    case ModelId::G0:
      return {{1, 2, 1, 2, t4},  {1, 2, 2, 1, -t4}, {1, 3, 1, 3, -q4},
              {2, 3, 2, 3, -q4}, {1, 3, 3, 1, q4},  {2, 3, 3, 2, q4}};
    case ModelId::G1:
      return {{1, 2, 1, 2, q4}, {1, 2, 2, 1, -q4},  {1, 3, 3, 1, q4},
              {1, 3, 1, 3, q4}, {2, 3, 2, 3, -t4}, {2, 3, 3, 2, -t4}};
    case ModelId::G2:
      return {{1, 2, 1, 2, -t4}, {1, 2, 2, 1, t4}, {1, 3, 1, 3, q4},
              {2, 3, 2, 3, q4},  {1, 3, 3, 1, q4}, {2, 3, 3, 2, q4}};
    case ModelId::G3:
      return {};
  }
  return {};
}

std::optional<CurvatureComponents> expand_curvature(
    const std::vector<PrintedCurvature>& entries, const Array3<int>& eps) {
  // Lowered components R_ijkl, unset until some printed entry reaches them.
  std::map<std::array<int, 4>, Rational> low;
  for (const auto& e : entries) {
    const int i = e.i - 1, j = e.j - 1, k = e.k - 1, l = e.l - 1;
    const Rational v = eps[l] * e.value;
    const std::pair<std::array<int, 4>, int> orbit[] = {
        {{i, j, k, l}, 1},  {{j, i, k, l}, -1}, {{i, j, l, k}, -1},
        {{j, i, l, k}, 1},  {{k, l, i, j}, 1},  {{l, k, i, j}, -1},
        {{k, l, j, i}, -1}, {{l, k, j, i}, 1}};
    for (const auto& [idx, s] : orbit) {
      const Rational w = s * v;
      auto [it, fresh] = low.emplace(idx, w);
      if (!fresh && it->second != w) return std::nullopt;
    }
  }
  CurvatureComponents out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          auto it = low.find({i, j, k, l});
          out.riem[i][j][k][l] = it == low.end() ? Rational(0)
                                                 : Rational(eps[l] * it->second);
        }
  return out;
}

PrintedRicci printed_ricci(ModelId id, const Rational& lambda) {
  const Rational l2 = lambda * lambda;
  auto diag = [](Rational a, Rational b, Rational c) {
    RationalMatrix3 m;
    for (auto& r : m) r.fill(0);
    m[0][0] = a, m[1][1] = b, m[2][2] = c;
    return m;
  };
  switch (id) {
    case ModelId::G0:
      return {diag(-l2 / 2, -l2 / 2, l2 / 2), -l2 / 2,
              diag(-l2 / 4, -l2 / 4, 3 * l2 / 4)};
    case ModelId::G1:
      return {diag(-l2 / 2, l2 / 2, -l2 / 2), l2 / 2,
              diag(-3 * l2 / 4, l2 / 4, -l2 / 4)};
    case ModelId::G2:
      return {diag(l2 / 2, l2 / 2, l2 / 2), l2 / 2,
              diag(l2 / 4, l2 / 4, 3 * l2 / 4)};
    case ModelId::G3:
      break;
  }
  return {diag(0, 0, 0), 0, diag(0, 0, 0)};
}

std::vector<CoordVectorField> killing_basis(ModelId id,
                                            const Rational& lambda) {
  const Poly L(lambda), L2 = L * L;
  const auto& x = X();
  const auto& y = Y();
  CoordVectorField x2{{1, 0, -y}}, x3{{0, 1, 0}}, x4{{0, 0, 1}};
  switch (id) {
    case ModelId::G0:
      return {{{L2 * y, -x, q(-1, 2) * (L2 * y * y - x * x)}}, x2, x3, x4};
    case ModelId::G1:
      return {{{L2 * y, x, q(-1, 2) * (x * x + L2 * y * y)}}, x2, x3, x4};
    case ModelId::G2:
      return {{{-L2 * y, x, q(1, 2) * (L2 * y * y - x * x)}}, x2, x3, x4};
    case ModelId::G3:
      return {};
  }
  return {};
}

std::vector<FrameVectorField> affine_family(ModelId id,
                                            const Rational& lambda) {
  const auto& x = X();
  const auto& y = Y();
  const auto& z = Z();
  const Rational l = id == ModelId::G3 ? Rational(1) : lambda;
  const Poly L(l);
  switch (id) {
    case ModelId::G0:
    case ModelId::G2:
      return units(
          [&](const Consts& c) {
            const Poly c1(c[1]), c2(c[2]), c3(c[3]), c4(c[4]);
            return FrameVectorField{
                {c1 * x + c2, -L * c1 * y + c3,
                 q(1, 2) * L * L * c1 * y * y + q(1, 2) * c1 * x * x + c2 * x -
                     L * c3 * y + c4}};
          },
          {1, 2, 3, 4});
    case ModelId::G1:
      return units(
          [&](const Consts& c) {
            const Poly c1(c[1]), c2(c[2]), c3(c[3]), c4(c[4]);
            const Poly inv_l2(1 / (l * l));
            return FrameVectorField{
                {q(1, 2) * c1 * y * y - q(1, 2) * inv_l2 * c1 * x * x +
                     c3 * x + c2 * y + c4,
                 -inv_l2 * c1 * x + c3, Poly(-1 / l) * (c1 * y + c2)}};
          },
          {1, 2, 3, 4});
    case ModelId::G3:
      return units(
          [&](const Consts& c) {
            Array3<Poly> p;
            auto C = [&](int i) { return Poly(c[i]); };
            const Poly y2 = y * y, y3 = y2 * y, y4 = y3 * y, y5 = y4 * y;
            p[0] = q(-1, 6) * C(1) * y4 + q(1, 6) * (2 * C(2) - 3 * C(5)) * y3 +
                   q(1, 2) * (2 * C(1) * x + C(4)) * y2 +
                   (C(1) * z + C(5) * x + C(6)) * y + C(2) * z + C(7) * x +
                   C(8);
            p[1] = (q(-1, 2) * C(1) * y2 - C(2) * y + C(9)) * z +
                   (q(-1, 2) * C(1) * y3 - q(1, 2) * (C(5) + C(2)) * y2 +
                    (C(9) - C(7)) * y + C(10)) *
                       x +
                   q(1, 12) * C(1) * y5 + q(1, 12) * (3 * C(5) - C(2)) * y4 +
                   q(1, 12) * (3 * C(7) - 3 * C(4) - 2 * C(9)) * y3 +
                   q(1, 2) * C(11) * y2 + C(12) * y + C(13);
            p[2] = (q(1, 2) * C(1) * y2 + C(2) * y + C(1) - C(9)) * z -
                   q(1, 12) * C(1) * y5 - q(1, 12) * (3 * C(5) - C(2)) * y4 +
                   q(1, 12) * (-3 * C(7) + 3 * C(4) + 2 * C(9) - 2 * C(1)) * y3 +
                   (q(1, 2) * C(1) * y3 + q(1, 2) * (C(2) + C(5)) * y2 +
                    (C(1) + C(7) - C(9)) * y + C(5) - C(2) - C(10)) *
                       x +
                   q(1, 2) * (C(2) - C(5) - C(11)) * y2 +
                   q(1, 2) * (C(4) + C(7) - 2 * C(12)) * y + C(10) + C(11) +
                   2 * C(6) - C(13);
            return FrameVectorField{p};
          },
          {1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
  }
  return {};
}

std::vector<FrameVectorField> ricci_family(ModelId id,
                                           const Rational& lambda) {
  const auto& x = X();
  const auto& y = Y();
  const Poly L(lambda);
  const Poly inv_l = id == ModelId::G3 ? Poly() : Poly(1 / lambda);
  switch (id) {
    case ModelId::G0:
      return units(
          [&](const Consts& c) {
            const Poly c1(c[1]), c2(c[2]), c3(c[3]), c4(c[4]);
            return FrameVectorField{
                {-inv_l * c1 * x + c3, c1 * y + c2,
                 q(-1, 2) * c1 * L * y * y - L * c2 * y -
                     q(1, 2) * inv_l * c1 * x * x + c3 * x + c4}};
          },
          {1, 2, 3, 4});
    case ModelId::G1:
      return units(
          [&](const Consts& c) {
            const Poly c1(c[1]), c2(c[2]), c3(c[3]), c4(c[4]);
            return FrameVectorField{
                {q(1, 2) * inv_l * c1 * x * x - q(1, 2) * L * c1 * y * y +
                     c2 * x - L * c3 * y + c4,
                 inv_l * c1 * x + c2, c1 * y + c3}};
          },
          {1, 2, 3, 4});
    case ModelId::G2:
      return units(
          [&](const Consts& c) {
            const Poly c1(c[1]), c2(c[2]), c3(c[3]), c4(c[4]);
            return FrameVectorField{
                {-inv_l * c1 * x + c2, c1 * y + c3,
                 q(-1, 2) * inv_l * c1 * x * x - q(1, 2) * L * c1 * y * y +
                     c2 * x - L * c3 * y + c4}};
          },
          {1, 2, 3, 4});
    case ModelId::G3:
      return {};
  }
  return {};
}

std::optional<std::vector<FrameVectorField>> stated_family(
    const MetricModel& model, SymmetryKind kind) {
  const Rational l = model.lambda.value_or(Rational(1));
  const bool g3 = model.id == ModelId::G3;
  switch (kind) {
    case SymmetryKind::Affine:
      return affine_family(model.id, l);
    case SymmetryKind::Ricci:
    case SymmetryKind::Curvature:
      if (g3) return std::nullopt;
      return ricci_family(model.id, l);
    case SymmetryKind::Killing:
    case SymmetryKind::Matter: {
      if (g3) return std::nullopt;
      std::vector<FrameVectorField> out;
      for (const auto& v : killing_basis(model.id, l))
        out.push_back(coord_to_frame(model, v));
      return out;
    }
  }
  return std::nullopt;
}

std::vector<NormFormula> printed_norms(ModelId id, const Rational& lambda) {
  const auto& x = X();
  const auto& y = Y();
  const Poly L2(lambda * lambda), inv_l2(1 / (lambda * lambda));
  switch (id) {
    case ModelId::G1: {
      const Poly u = x * x - L2 * y * y;
      return {{1, u * (1 + q(1, 4) * u)}, {2, y * y - inv_l2}};
    }
    case ModelId::G2: {
      const Poly u = x * x + L2 * y * y;
      return {{1, u * (1 - q(1, 4) * u)}, {2, inv_l2 - y * y}, {3, 1 - x * x}};
    }
    default:
      return {};
  }
}

std::vector<ComponentDisplay> tensor_displays(const Rational& lambda) {
  const Poly L(lambda), L2(lambda * lambda), L3(lambda * lambda * lambda);
  const auto& x = X();
  const auto R = SymmetryKind::Ricci;
  const auto T = SymmetryKind::Matter;
  const auto G0 = ModelId::G0, G1 = ModelId::G1, G2 = ModelId::G2;
  const Poly h = q(1, 2) * L2, k = q(1, 4) * L2;
  return {
      {G0, R, 1, 1, L2 * (x * f(1, "z") - f(1, "y"))},
      {G0, R, 1, 2, h * (x * f(2, "z") - L * f(1, "x") - f(2, "y"))},
      {G0, R, 1, 3, -h * (x * f(3, "z") - f(3, "y") + f(1, "z") - L * f(2))},
      {G0, R, 2, 2, -L3 * f(2, "x")},
      {G0, R, 2, 3, h * (L * f(3, "x") - L * f(1) - f(2, "z"))},
      {G0, R, 3, 3, L2 * f(3, "z")},

      {G0, T, 1, 1, h * (x * f(1, "x") - f(1, "y"))},
      {G0, T, 1, 2, -k * (f(2, "y") - x * f(2, "z") + L * f(1, "x"))},
      {G0, T, 1, 3,
       -k * (3 * (x * f(3, "z") - f(3, "y") - L * f(2)) + f(1, "z"))},
      {G0, T, 2, 2, q(-1, 2) * L3 * f(2, "x")},
      {G0, T, 2, 3, -k * (3 * L * (f(1) - f(3, "x")) + f(2, "z"))},
      {G0, T, 3, 3, q(3, 2) * L2 * f(3, "z")},

      {G1, R, 1, 1, -L2 * f(1, "z")},
      {G1, R, 1, 2, h * (f(2, "z") - L * f(3) - f(1, "y") + x * f(1, "z"))},
      {G1, R, 1, 3, h * (-f(3, "z") + L * f(2) - L * f(1, "x"))},
      {G1, R, 2, 2, L2 * (f(2, "y") - x * f(2, "z"))},
      {G1, R, 2, 3, h * (-f(3, "y") + x * f(3, "z") + L * f(2, "x"))},
      {G1, R, 3, 3, -L3 * f(3, "x")},

      {G1, T, 1, 1, q(-3, 2) * L2 * f(1, "z")},
      {G1, T, 1, 2,
       k * (f(2, "z") - 3 * (L * f(3) + f(1, "y") - x * f(1, "z")))},
      {G1, T, 1, 3, k * (-f(3, "z") + 3 * L * (f(2) - f(1, "x")))},
      {G1, T, 2, 2, h * (f(2, "y") - x * f(2, "z"))},
      {G1, T, 2, 3, k * (-f(3, "y") + x * f(3, "z") + L * f(2, "x"))},
      {G1, T, 3, 3, q(-1, 2) * L3 * f(3, "x")},

      {G2, R, 1, 1, L2 * (f(1, "y") - x * f(1, "z"))},
      {G2, R, 1, 2, h * (f(2, "y") - x * f(2, "z") + L * f(1, "x"))},
      {G2, R, 1, 3, h * (L * f(2) + f(3, "y") + f(1, "z") - x * f(3, "z"))},
      {G2, R, 2, 2, L3 * f(2, "x")},
      {G2, R, 2, 3, h * (f(2, "z") + L * f(3, "x") - L * f(1))},
      {G2, R, 3, 3, L2 * f(3, "z")},

      {G2, T, 1, 1, h * (f(1, "y") - x * f(1, "z"))},
      {G2, T, 1, 2, k * (f(2, "y") - x * f(2, "z") + L * f(1, "x"))},
      {G2, T, 1, 3,
       k * (f(1, "z") + 3 * (L * f(2) + f(3, "y") - x * f(3, "z")))},
      {G2, T, 2, 2, q(1, 2) * L3 * f(2, "x")},
      {G2, T, 2, 3, k * (f(2, "z") - 3 * L * (f(1) + f(3, "x")))},
      {G2, T, 3, 3, q(3, 2) * L2 * f(3, "z")},
  };
}

std::vector<DiffOp> printed_affine_system(ModelId id, const Rational& lambda) {
  const Poly L(lambda), L2(lambda * lambda);
  const auto& x = X();
  const Poly x2 = x * x;
  // f_yy - 2x f_yz + x^2 f_zz, i.e. e1(e1(f)) on the G0/G2 frame.
  auto e1e1 = [&](int c) {
    return f(c, "yy") - 2 * x * f(c, "yz") + x2 * f(c, "zz");
  };
  switch (id) {
    case ModelId::G0:
      return {
          e1e1(1),
          e1e1(2) - L * (L * f(2) + f(3, "y") - x * f(3, "z")),
          f(3, "yy") - 2 * x * f(3, "yz") + L * (f(2, "y") - x * f(2, "z")),
          2 * (f(1, "xy") - x * f(1, "xz")) + L * f(2) + f(3, "y") -
              x * f(3, "z") - f(1, "z"),
          2 * (f(2, "xy") - x * f(2, "xz")) + L * f(1) - L * f(3, "x") -
              f(2, "z"),
          2 * (f(3, "xy") - x * f(3, "xz")) + x * f(1, "z") - f(1, "y") +
              L * f(2, "x") - f(3, "z"),
          2 * (f(1, "yz") - x * f(1, "zz")) +
              L * (f(2, "y") - x * f(2, "z") + L * f(1, "x")),
          2 * (f(2, "yz") - x * f(2, "zz")) +
              L * (-f(3, "z") + x * f(1, "z") - f(1, "y") + L * f(2, "x")),
          2 * f(3, "yz") + L * (f(2, "z") - L * f(1) + L * f(3, "x")),
          f(3, "x") + f(1, "xx") - f(1),
          f(2, "xx"),
          f(3, "xx") - f(1, "x"),
          f(3, "z") + L * f(2, "x") + x * f(1, "z") - f(1, "y") +
              2 * f(1, "xz"),
          L * f(1, "x") - x * f(2, "z") + f(2, "y") - 2 * f(2, "xz"),
          L * f(2) + f(3, "y") - x * f(3, "z") + f(1, "z") - 2 * f(3, "xz"),
          L * f(2, "z") + f(1, "zz"),
          L * f(1, "z") - f(2, "zz"),
          f(3, "zz"),
      };
    case ModelId::G1: {
      const Poly hl = q(1, 2) * L, hl2 = q(1, 2) * L2;
      return {
          hl2 * (-f(1, "x") + f(2)) + hl * f(3, "z") + f(1, "yz") -
              x * f(1, "zz"),
          f(2, "yz") - x * f(2, "zz") + hl * (f(3, "y") - x * f(3, "z")) -
              hl2 * f(2, "x"),
          hl * f(1, "z") - hl2 * f(3, "x") + f(3, "yz") - x * f(3, "zz") +
              hl * (f(2, "y") - x * f(2, "z")),
          x * f(1, "z") - f(1, "y") - L * f(3) + 2 * f(1, "xz") - f(2, "z"),
          x * f(2, "z") - f(2, "y") + f(1, "z") + 2 * f(2, "xz") +
              L * f(3, "x"),
          x * f(3, "z") - f(3, "y") + 2 * f(3, "xz") + L * f(2, "x"),
          x * f(2, "z") - f(1, "z") - f(2, "y") +
              2 * (f(1, "xy") - x * f(1, "xz")) + L * f(3, "x"),
          f(1, "y") - f(2, "z") - x * f(1, "z") + L * f(3) +
              2 * (f(2, "xy") - x * f(2, "xz")),
          L * (f(1, "x") - f(2)) + 2 * (f(3, "xy") - x * f(3, "xz")) -
              f(3, "z"),
          f(1, "zz"),
          e1e1(2),
          f(3, "xx"),
          f(2, "zz") + L * f(3, "z"),
          f(3, "zz") + L * f(2, "z"),
          e1e1(1) + L * (f(3, "y") - x * f(3, "z")),
          L * (f(1, "y") - x * f(1, "z") + L * f(3)) + e1e1(3),
          f(1, "xx") - f(2, "x"),
          f(1, "x") + f(2, "xx") - f(2),
      };
    }
    case ModelId::G2:
      return {
          e1e1(1),
          e1e1(2) + L * (L * f(2) + f(3, "y") - x * f(3, "z")),
          e1e1(3) + L * (f(2, "y") - x * f(2, "z")),
          f(2, "xx"),
          f(1, "xx") - f(3, "x") + f(1),
          f(3, "xx") - f(1, "x"),
          f(3, "zz"),
          f(1, "zz") - L * f(2, "z"),
          f(2, "zz") + L * f(1, "z"),
          f(1, "z") + f(3, "y") - x * f(3, "z") + L * f(2) -
              2 * (f(1, "xy") - x * f(1, "xz")),
          f(2, "z") + L * (f(1) - f(3, "x")) -
              2 * (f(2, "xy") - x * f(2, "xz")),
          f(3, "z") + f(1, "y") - x * f(1, "z") - L * f(2, "x") +
              2 * (x * f(3, "xz") - f(3, "xy")),
          L * (L * f(1, "x") + f(2, "y") - x * f(2, "z")) -
              2 * (f(1, "yz") - x * f(1, "zz")),
          L * (-L * f(2, "x") + f(1, "y") - x * f(1, "z") + f(3, "z")) +
              2 * (f(2, "yz") - x * f(2, "zz")),
          L * (L * (f(1) - f(3, "x")) + f(2, "z")) +
              2 * (f(3, "yz") - x * f(3, "zz")),
          f(1, "y") - f(3, "z") - x * f(1, "z") - L * f(2, "x") +
              2 * f(1, "xz"),
          f(2, "y") - x * f(2, "z") + L * f(1, "x") + 2 * f(2, "xz"),
          L * f(2) + f(3, "y") - x * f(3, "z") - f(1, "z") + 2 * f(3, "xz"),
      };
    case ModelId::G3: {
      std::vector<DiffOp> sys{
          f(1, "x") - 2 * (f(2, "y") + f(3, "y")) + f(1, "yy"),
          f(2, "x") + 2 * f(1, "y") + f(2, "yy") - f(2) - f(3),
          f(3, "x") - 2 * f(1, "y") + f(3, "yy") + f(2) + f(3),
          f(2, "x") + f(3, "x") - f(1, "xy") + f(1, "z"),
          f(1, "x") - f(2, "z") + f(2, "xy"),
          f(1, "x") + f(3, "z") - f(3, "xy"),
          f(1, "yz") - f(2, "z") - f(3, "z"),
          f(2, "yz") + f(1, "z"),
          f(3, "yz") - f(1, "z"),
      };
      for (int i = 1; i <= 3; ++i)
        for (const char* v : {"xx", "zz", "xz"}) sys.push_back(f(i, v));
      return sys;
    }
  }
  return {};
}

}  // namespace heis::reference
