#pragma once

#include "heis/linalg.hpp"
#include "heis/operators.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

/// One unknown coefficient: the coefficient of `mono` in f_{component+1}.
struct Unknown {
  int component;
  Monomial mono;
};

/// All frame fields whose components have degree <= degree.
/// Unknowns are component-major, descending graded-lex within a component.
struct Ansatz {
  int degree = 0;
  std::vector<Unknown> unknowns;

  static Ansatz of_degree(int d);
  int size() const { return static_cast<int>(unknowns.size()); }
  /// The field with unknown `k` set to 1 and all others 0.
  FrameVectorField basis_field(int k) const;
  FrameVectorField field_from(const SparseRow& coeffs) const;
};

struct RowLabel {
  std::string component;  // operator component label, e.g. "(1,2)"
  Monomial mono;
};

/// Coefficient equations of one operator on one ansatz: each row is the
/// coefficient of one monomial in one operator output component.
struct LinearSystem {
  ModelId model;
  SymmetryKind kind;
  Ansatz ansatz;
  std::vector<SparseRow> rows;
  std::vector<RowLabel> labels;

  int ncols() const { return ansatz.size(); }
};

LinearSystem assemble_system(const Geometry& geo, SymmetryKind kind,
                             int degree);

struct SolutionBasis {
  ModelId model;
  SymmetryKind kind;
  int degree = 0;
  int dimension = 0;
  std::vector<FrameVectorField> basis;
  bool stabilized = false;
  /// Kernel dimension at each degree 0..(last computed), when known.
  std::vector<int> dimension_by_degree;
  /// True when the operator annihilates every ansatz field at every
  /// computed degree (e.g. Ricci collineations of a flat metric).
  bool degenerate = false;
};

/// Thrown when a basis member fails the closed-loop substitution check or
/// modular and rational ranks disagree.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact kernel of the system. Every basis vector is substituted back
/// through the operator and must give exactly zero; the rational rank is
/// cross-checked against the rank modulo a 61-bit prime.
SolutionBasis nullspace(const Geometry& geo, const LinearSystem& sys);

/// Pure linear-algebra part of nullspace() for an explicit matrix.
std::vector<SparseRow> matrix_kernel(const std::vector<SparseRow>& rows,
                                     int ncols);

/// Thrown when a non-degenerate kind has not stabilized by d_max.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxDegree = 6;

/// 3 * binomial(d + 3, 3): number of unknowns of the degree-d ansatz.
int ansatz_size(int d);

/// Solves at d = 0, 1, ... and returns the basis at the first d with
/// dim(d) == dim(d + 1). A kind whose kernel is the whole ansatz at every
/// degree up to d_max is reported as degenerate and not stabilized.
SolutionBasis stabilized_dimension(const Geometry& geo, SymmetryKind kind,
                                   int d_max = kDefaultMaxDegree);

}  // namespace heis
