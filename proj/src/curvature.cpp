#include "heis/curvature.hpp"

namespace heis {

bool CurvatureComponents::is_flat() const {
  for (const auto& a : riem)
    for (const auto& b : a)
      for (const auto& c : b)
        for (const auto& d : c)
          if (d != 0) return false;
  return true;
}

ConnectionCoeffs levi_civita(const MetricModel& model) {
  const auto& C = model.structure;
  const auto& e = model.signature;
  ConnectionCoeffs out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rational twice = e[k] * C[i][j][k] - e[i] * C[j][k][i] +
                         e[j] * C[k][i][j];
        out.gamma[i][j][k] = twice / (2 * e[k]);
      }
  return out;
}

CurvatureComponents curvature(const MetricModel& model,
                              const ConnectionCoeffs& connection) {
  const auto& G = connection.gamma;
  const auto& C = model.structure;
  CurvatureComponents out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Rational r = 0;
          for (int m = 0; m < 3; ++m)
            r += G[j][k][m] * G[i][m][l] - G[i][k][m] * G[j][m][l] -
                 C[i][j][m] * G[m][k][l];
          out.riem[i][j][k][l] = r;
        }
  return out;
}

CurvatureComponents curvature(const MetricModel& model) {
  return curvature(model, levi_civita(model));
}

RicciData ricci(const MetricModel& model, const CurvatureComponents& r) {
  const auto& e = model.signature;
  RicciData out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      // g(R(e_k, e_i) e_j, e_k) = eps_k R^k_kij
      for (int k = 0; k < 3; ++k) s += e[k] * (e[k] * r.riem[k][i][j][k]);
      out.rho[i][j] = s;
    }
  out.tau = 0;
  for (int i = 0; i < 3; ++i) out.tau += e[i] * out.rho[i][i];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.matter[i][j] =
          out.rho[i][j] - (i == j ? Rational(out.tau * e[i] / 2) : Rational(0));
  return out;
}

RicciData ricci(const MetricModel& model) {
  return ricci(model, curvature(model));
}

RationalMatrix3 ricci_by_trace(const CurvatureComponents& r) {
  RationalMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = 0;
      for (int k = 0; k < 3; ++k) out[i][j] += r.riem[k][i][j][k];
    }
  return out;
}

Geometry derive_geometry(const MetricModel& model) {
  Geometry g{model, levi_civita(model), {}, {}};
  g.curvature = curvature(model, g.connection);
  g.ricci = ricci(model, g.curvature);
  return g;
}

std::vector<std::string> koszul_polynomial_mismatches(
    const MetricModel& model) {
  // Brackets from the frame itself, as polynomials.
  Array3<Array3<Array3<Poly>>> bracket;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bracket[i][j] = recomputed_bracket(model, i, j);

  const auto& e = model.signature;
  const auto expected = levi_civita(model);
  std::vector<std::string> bad;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Poly twice = Poly(e[k]) * bracket[i][j][k] -
                     Poly(e[i]) * bracket[j][k][i] +
                     Poly(e[j]) * bracket[k][i][j];
        Poly g = twice;
        g.scale(Rational(1) / (2 * e[k]));
        if (!g.is_constant() || g.constant_term() != expected.gamma[i][j][k])
          bad.push_back("Gamma^" + std::to_string(k + 1) + "_" +
                        std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                        g.to_string());
      }
  return bad;
}

bool is_metric_compatible(const MetricModel& model,
                          const ConnectionCoeffs& c) {
  const auto& e = model.signature;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (e[j] * c.gamma[i][k][j] + e[k] * c.gamma[i][j][k] != 0)
          return false;
  return true;
}

bool is_torsion_free(const MetricModel& model, const ConnectionCoeffs& c) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (c.gamma[i][j][k] - c.gamma[j][i][k] != model.structure[i][j][k])
          return false;
  return true;
}

bool has_curvature_symmetries(const CurvatureComponents& r) {
  const auto& R = r.riem;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          if (R[i][j][k][l] + R[j][i][k][l] != 0) return false;
          if (R[i][j][k][l] + R[j][k][i][l] + R[k][i][j][l] != 0) return false;
        }
  return true;
}

}  // namespace heis
