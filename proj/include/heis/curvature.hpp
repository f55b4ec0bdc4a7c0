#pragma once

#include "heis/models.hpp"

#include <string>
#include <vector>

namespace heis {

/// nabla_{e_i} e_j = gamma[i][j][k] e_k.
struct ConnectionCoeffs {
  Rational3 gamma;
};

/// R(e_i, e_j) e_k = riem[i][j][k][l] e_l with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
struct CurvatureComponents {
  Array3<Array3<Array3<Array3<Rational>>>> riem;
  bool is_flat() const;
};

using RationalMatrix3 = Array3<Array3<Rational>>;

struct RicciData {
  RationalMatrix3 rho;
  Rational tau;
  RationalMatrix3 matter;  // rho - (tau / 2) diag(epsilon)
};

/// Everything the symmetry operators need about one model: frame data plus
/// the constant connection, curvature and Ricci components.
struct Geometry {
  MetricModel model;
  ConnectionCoeffs connection;
  CurvatureComponents curvature;
  RicciData ricci;
};

/// Koszul formula on the orthonormal frame with constant metric components:
/// 2 eps_k G^k_ij = eps_k C^k_ij - eps_i C^i_jk + eps_j C^j_ki.
ConnectionCoeffs levi_civita(const MetricModel& model);

CurvatureComponents curvature(const MetricModel& model,
                              const ConnectionCoeffs& gamma);
CurvatureComponents curvature(const MetricModel& model);

/// rho_ij = sum_k eps_k g(R(e_k, e_i) e_j, e_k); tau = sum_i eps_i rho_ii.
RicciData ricci(const MetricModel& model, const CurvatureComponents& riem);
RicciData ricci(const MetricModel& model);

/// Ricci as the trace of Z -> R(Z, e_i) e_j. Same tensor as ricci().rho.
RationalMatrix3 ricci_by_trace(const CurvatureComponents& riem);

Geometry derive_geometry(const MetricModel& model);

/// Recomputes the connection with polynomial arithmetic (brackets taken from
/// the frame, not from the stored structure constants) and returns the
/// names of any component that is non-constant or disagrees with
/// levi_civita(). Empty means the constant-component assumption holds.
std::vector<std::string> koszul_polynomial_mismatches(const MetricModel& model);

/// eps_j G^j_ik + eps_k G^k_ij == 0 for all i, j, k.
bool is_metric_compatible(const MetricModel& model, const ConnectionCoeffs& c);
/// G^k_ij - G^k_ji == C^k_ij.
bool is_torsion_free(const MetricModel& model, const ConnectionCoeffs& c);
/// Antisymmetry in the first pair and the first Bianchi identity.
bool has_curvature_symmetries(const CurvatureComponents& r);

}  // namespace heis
