#pragma once

#include "heis/curvature.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace heis {

/// Which tensor the vector field must preserve.
enum class SymmetryKind { Killing, Affine, Ricci, Curvature, Matter };

inline constexpr std::array<SymmetryKind, 5> kAllKinds{
    SymmetryKind::Killing, SymmetryKind::Affine, SymmetryKind::Ricci,
    SymmetryKind::Curvature, SymmetryKind::Matter};

std::string kind_name(SymmetryKind kind);
SymmetryKind parse_kind(std::string_view name);

/// (L_X S)(e_i, e_j) for i <= j, stored in the order
/// (1,1), (1,2), (1,3), (2,2), (2,3), (3,3).
struct SymTensor2Result {
  std::array<Poly, 6> comps;
  static int index(int i, int j);  // 0-based i, j in any order
  const Poly& at(int i, int j) const { return comps[index(i, j)]; }
};

/// e_k component of (L_X nabla)(e_i, e_j).
struct Conn3Result {
  Array3<Array3<Array3<Poly>>> comps;
};

/// e_l component of (L_X R)(e_i, e_j) e_k.
struct Curv4Result {
  Array3<Array3<Array3<Array3<Poly>>>> comps;
};

/// (nabla_{e_i} X)_k = e_i(f_k) + sum_j f_j Gamma^k_ij.
FrameVectorField covariant_derivative_vf(const Geometry& geo, int i,
                                         const FrameVectorField& X);

/// [X, Y]_k = X(g_k) - Y(f_k) + sum_ij f_i g_j C^k_ij.
FrameVectorField lie_bracket(const MetricModel& model,
                             const FrameVectorField& X,
                             const FrameVectorField& Y);

/// comps(i,j) = eps_j (nabla_{e_i} X)_j + eps_i (nabla_{e_j} X)_i.
SymTensor2Result killing_operator(const Geometry& geo,
                                  const FrameVectorField& X);

/// [X, nabla_{e_i} e_j] - nabla_{[X, e_i]} e_j - nabla_{e_i} [X, e_j].
Conn3Result affine_operator(const Geometry& geo, const FrameVectorField& X);

/// Lie derivative of a constant symmetric frame tensor S.
SymTensor2Result sym2_lie_derivative(const Geometry& geo,
                                     const RationalMatrix3& S,
                                     const FrameVectorField& X);

/// [X, R(e_i,e_j)e_k] - R([X,e_i],e_j)e_k - R(e_i,[X,e_j])e_k - R(e_i,e_j)[X,e_k].
Curv4Result curvature_lie_derivative(const Geometry& geo,
                                     const FrameVectorField& X);

/// One scalar output of a symmetry operator plus its label, e.g. "(1,2)"
/// or "(1,2;3)" for the e_3 part of (L_X nabla)(e_1, e_2).
struct OperatorComponent {
  std::string label;
  Poly value;
};

/// Flattened output of the operator for `kind`; X is a symmetry iff every
/// value is zero. The component order is fixed per kind.
std::vector<OperatorComponent> operator_components(const Geometry& geo,
                                                   SymmetryKind kind,
                                                   const FrameVectorField& X);

bool is_symmetry(const Geometry& geo, SymmetryKind kind,
                 const FrameVectorField& X);

}  // namespace heis
