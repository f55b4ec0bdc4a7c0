#pragma once

// Independent coordinate-basis computations used as oracles for the frame
// based library code. Everything here works with the coordinate metric
// g_ab = sum_k eps_k theta^k_a theta^k_b built directly from the frame.

#include "heis/models.hpp"

#include <doctest.h>

#include <random>
#include <vector>

namespace oracle {

using heis::Poly;
using heis::Rational;
using heis::Var;

using P3 = std::array<Poly, 3>;
using P33 = std::array<P3, 3>;
using P333 = std::array<P33, 3>;
using P3333 = std::array<P333, 3>;

inline Poly D(const Poly& p, int a) { return p.derivative(static_cast<Var>(a)); }

// Frame e_i = sum_a F[i][a] d/da, written out by hand for each model.
inline P33 frame(heis::ModelId id, const Rational& l) {
  const Poly x = Poly::var(Var::X);
  P33 F{};
  switch (id) {
    case heis::ModelId::G0:
    case heis::ModelId::G2:
      F[0] = {0, 1, -x};
      F[1] = {l, 0, 0};
      F[2] = {0, 0, 1};
      break;
    case heis::ModelId::G1:
      F[0] = {0, 0, 1};
      F[1] = {0, 1, -x};
      F[2] = {l, 0, 0};
      break;
    case heis::ModelId::G3:
      F[0] = {1, 0, 0};
      F[1] = {0, 1, 1 - x};
      F[2] = {0, 1, -x};
      break;
  }
  return F;
}

inline std::array<int, 3> signature(heis::ModelId id) {
  if (id == heis::ModelId::G0) return {1, 1, 1};
  return {1, 1, -1};
}

// Coframe: Theta[k][a] with theta^k(d/da). Found by inverting F with Cramer's
// rule; the determinant of every frame is a nonzero constant.
inline P33 coframe(const P33& F) {
  auto cof = [&](int r, int c) {
    int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return F[r0][c0] * F[r1][c1] - F[r0][c1] * F[r1][c0];
  };
  Poly det = F[0][0] * cof(0, 0) + F[0][1] * cof(0, 1) + F[0][2] * cof(0, 2);
  REQUIRE(det.is_constant());
  Rational inv = 1 / det.constant_term();
  // (F^-1)[a][k] = cof(k, a) / det, and theta^k_a = (F^-1)[a][k].
  P33 T{};
  for (int k = 0; k < 3; ++k)
    for (int a = 0; a < 3; ++a) T[k][a] = Poly(cof(k, a)).scale(inv);
  return T;
}

struct CoordGeometry {
  heis::ModelId id;
  Rational lambda;
  std::array<int, 3> eps;
  P33 F, T;       // frame and coframe
  P33 g, ginv;    // metric and inverse metric
  P333 chr;       // chr[c][a][b] = Gamma^c_ab
  P3333 riem;     // riem[r][s][m][n] = R^r_smn, R(d_m, d_n) d_s = R^r_smn d_r

  CoordGeometry(heis::ModelId model, const Rational& l)
      : id(model), lambda(l), eps(signature(model)), F(frame(model, l)),
        T(coframe(F)) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k) {
          g[a][b] += Poly(T[k][a] * T[k][b]).scale(eps[k]);
          ginv[a][b] += Poly(F[k][a] * F[k][b]).scale(eps[k]);
        }
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          Poly s;
          for (int d = 0; d < 3; ++d)
            s += ginv[c][d] * (D(g[b][d], a) + D(g[a][d], b) - D(g[a][b], d));
          chr[c][a][b] = s.scale(Rational(1, 2));
        }
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 3; ++m)
          for (int n = 0; n < 3; ++n) {
            Poly v = D(chr[r][n][s], m) - D(chr[r][m][s], n);
            for (int q = 0; q < 3; ++q)
              v += chr[r][m][q] * chr[q][n][s] - chr[r][n][q] * chr[q][m][s];
            riem[r][s][m][n] = v;
          }
  }

  // Coordinate vector of frame field sum f_i e_i.
  P3 to_coord(const P3& f) const {
    P3 v{};
    for (int a = 0; a < 3; ++a)
      for (int i = 0; i < 3; ++i) v[a] += f[i] * F[i][a];
    return v;
  }
  P3 to_frame(const P3& v) const {
    P3 f{};
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a) f[k] += v[a] * T[k][a];
    return f;
  }

  // Frame components of a covariant 2-tensor S_ab.
  P33 frame_2form(const P33& S) const {
    P33 out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) out[i][j] += F[i][a] * F[j][b] * S[a][b];
    return out;
  }

  // Coordinate components of a frame-constant symmetric tensor.
  P33 coord_2form(const std::array<std::array<Rational, 3>, 3>& S) const {
    P33 out{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            if (S[k][l] != 0)
              out[a][b] += Poly(T[k][a] * T[l][b]).scale(S[k][l]);
    return out;
  }

  // Lie derivative of a covariant 2-tensor along coordinate field X.
  static P33 lie_2form(const P33& S, const P3& X) {
    P33 out{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          out[a][b] += X[c] * D(S[a][b], c) + S[c][b] * D(X[c], a) +
                       S[a][c] * D(X[c], b);
    return out;
  }

  P3 bracket(const P3& X, const P3& Y) const {
    P3 out{};
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        out[c] += X[a] * D(Y[c], a) - Y[a] * D(X[c], a);
    return out;
  }

  // nabla_Y X in coordinates.
  P3 covariant(const P3& Y, const P3& X) const {
    P3 out{};
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a) {
        Poly s = D(X[c], a);
        for (int b = 0; b < 3; ++b) s += chr[c][a][b] * X[b];
        out[c] += Y[a] * s;
      }
    return out;
  }

  // (L_X Gamma)^c_ab.
  P333 lie_connection(const P3& X) const {
    P333 out{};
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          Poly v = D(D(X[c], a), b);
          for (int d = 0; d < 3; ++d)
            v += X[d] * D(chr[c][a][b], d) - chr[d][a][b] * D(X[c], d) +
                 chr[c][d][b] * D(X[d], a) + chr[c][a][d] * D(X[d], b);
          out[c][a][b] = v;
        }
    return out;
  }

  // (L_X R)^r_smn.
  P3333 lie_riemann(const P3& X) const {
    P3333 out{};
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 3; ++m)
          for (int n = 0; n < 3; ++n) {
            Poly v;
            for (int q = 0; q < 3; ++q)
              v += X[q] * D(riem[r][s][m][n], q) - riem[q][s][m][n] * D(X[r], q) +
                   riem[r][q][m][n] * D(X[q], s) + riem[r][s][q][n] * D(X[q], m) +
                   riem[r][s][m][q] * D(X[q], n);
            out[r][s][m][n] = v;
          }
    return out;
  }

  // Ric_sn = R^m_smn.
  P33 ricci() const {
    P33 out{};
    for (int s = 0; s < 3; ++s)
      for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) out[s][n] += riem[m][s][m][n];
    return out;
  }

  // Frame components: e_l part of T(e_i, e_j) e_k for a (1,3) tensor.
  Poly frame_13(const P3333& R, int i, int j, int k, int l) const {
    Poly out;
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        for (int m = 0; m < 3; ++m)
          for (int n = 0; n < 3; ++n) {
            if (R[r][s][m][n].is_zero()) continue;
            out += F[i][m] * F[j][n] * F[k][s] * R[r][s][m][n] * T[l][r];
          }
    return out;
  }

  // Frame components: e_k part of T(e_i, e_j) for a (1,2) tensor T^c_ab.
  Poly frame_12(const P333& G, int i, int j, int k) const {
    Poly out;
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) out += F[i][a] * F[j][b] * G[c][a][b] * T[k][c];
    return out;
  }
};

// Deterministic pseudo-random polynomial with up to `terms` terms of degree
// <= deg and small rational coefficients.
inline Poly random_poly(std::mt19937& rng, int deg, int terms) {
  std::uniform_int_distribution<int> e(0, deg), num(-4, 4), den(1, 3);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    int a = e(rng), b = e(rng), c = e(rng);
    while (a + b + c > deg) {
      if (a) --a;
      else if (b) --b;
      else --c;
    }
    p.add_term(heis::Monomial(a, b, c), Rational(num(rng), den(rng)));
  }
  return p;
}

inline heis::FrameVectorField random_field(std::mt19937& rng, int deg, int terms) {
  return {{random_poly(rng, deg, terms), random_poly(rng, deg, terms),
           random_poly(rng, deg, terms)}};
}

inline std::vector<Rational> lambdas() {
  return {Rational(1), Rational(2), Rational(1, 2), Rational(-3)};
}

// Admissible lambda values for a model (G0 needs lambda > 0).
inline std::vector<Rational> lambdas_for(heis::ModelId id) {
  std::vector<Rational> out;
  for (const auto& l : lambdas())
    if (id != heis::ModelId::G0 || l > 0) out.push_back(l);
  return out;
}

inline heis::MetricModel build(heis::ModelId id, const Rational& l) {
  if (id == heis::ModelId::G3) return heis::build_model(id, std::nullopt);
  return heis::build_model(id, l);
}

}  // namespace oracle
