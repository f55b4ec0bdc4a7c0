#pragma once

#include "heis/diffop.hpp"
#include "heis/operators.hpp"

#include <optional>
#include <vector>

/// Closed-form results for the four Heisenberg metrics, transcribed as data
/// so the computed kernels and operators can be checked against them.
namespace heis::reference {

/// [e_i, e_j] = sum_k coeffs[k] e_k as printed (1-based, either order).
/// Pairs neither listed nor reversed from a listed pair are zero.
struct PrintedBracket {
  int i, j;
  Array3<Rational> coeffs;
};
std::vector<PrintedBracket> printed_brackets(ModelId id, const Rational& lambda);

/// nabla_{e_i} e_j = gamma[i][j][k] e_k (0-based) with every component the
/// print leaves out set to zero.
Rational3 printed_connection(ModelId id, const Rational& lambda);

/// R(e_i, e_j) e_k = value e_l as printed (1-based).
struct PrintedCurvature {
  int i, j, k, l;
  Rational value;
};
/// The listed entries only; the rest follow from the curvature symmetries.
/// Empty for the flat G3.
std::vector<PrintedCurvature> printed_curvature(ModelId id,
                                                const Rational& lambda);

/// Fills R^l_ijk from printed entries using R_ijkl = -R_jikl = -R_ijlk =
/// R_klij with R_ijkl = eps_l R^l_ijk; unlisted orbits are zero. Returns
/// nullopt when two printed entries contradict each other.
std::optional<CurvatureComponents> expand_curvature(
    const std::vector<PrintedCurvature>& entries, const Array3<int>& eps);

struct PrintedRicci {
  RationalMatrix3 rho;
  Rational tau;
  RationalMatrix3 matter;
};
/// Ricci tensor, scalar curvature and matter tensor as printed; all zero
/// for G3.
PrintedRicci printed_ricci(ModelId id, const Rational& lambda);

/// Killing basis X1..X4 in coordinates for G0, G1, G2; empty for G3.
std::vector<CoordVectorField> killing_basis(ModelId id, const Rational& lambda);

/// Affine family, one field per free constant c_i set to 1 (rest 0).
/// Four fields for G0..G2, twelve for G3. lambda is ignored for G3.
std::vector<FrameVectorField> affine_family(ModelId id, const Rational& lambda);

/// Ricci-collineation family, one field per c_i; empty for G3.
std::vector<FrameVectorField> ricci_family(ModelId id, const Rational& lambda);

/// The closed-form solution space the text states for (model, kind) in
/// frame components, or nullopt when it gives none (e.g. G3 Killing).
/// Curvature uses the Ricci family and matter the Killing basis.
std::optional<std::vector<FrameVectorField>> stated_family(
    const MetricModel& model, SymmetryKind kind);

/// Printed value of ||X_k||^2 for a member of killing_basis().
struct NormFormula {
  int index;  // 1-based k of X_k
  Poly value;
};
/// Empty for G0 and G3.
std::vector<NormFormula> printed_norms(ModelId id, const Rational& lambda);

/// One printed component of L_X rho or L_X T as a differential expression
/// in f1, f2, f3.
struct ComponentDisplay {
  ModelId model;
  SymmetryKind kind;  // Ricci or Matter
  int i, j;           // 1-based, i <= j
  DiffOp op;
};
/// All such displays for G0, G1, G2 (36 in total).
std::vector<ComponentDisplay> tensor_displays(const Rational& lambda);

/// The printed eighteen-equation affine system of a model, in print order.
std::vector<DiffOp> printed_affine_system(ModelId id, const Rational& lambda);

}  // namespace heis::reference
