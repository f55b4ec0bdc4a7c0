#pragma once

#include "heis/nullspace.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heis {

/// Coordinates of frame fields in a shared monomial basis: one column per
/// (component, monomial) pair occurring in any of the fields.
class FieldCoordinates {
 public:
  explicit FieldCoordinates(const std::vector<FrameVectorField>& fields);
  void extend(const FrameVectorField& X);
  SparseRow row(const FrameVectorField& X) const;
  int ncols() const { return static_cast<int>(columns_.size()); }

 private:
  std::map<std::pair<int, Monomial>, int> columns_;
};

/// Rank of a list of fields over Q.
int field_rank(const std::vector<FrameVectorField>& fields);

/// True iff every member of B is an exact combination of members of A.
bool span_contains(const std::vector<FrameVectorField>& A,
                   const std::vector<FrameVectorField>& B);

bool span_equal(const std::vector<FrameVectorField>& A,
                const std::vector<FrameVectorField>& B);

/// Structure of the bracket algebra spanned by a basis B_1..B_n:
/// [B_a, B_b] = sum_c structure_constants[a][b][c] B_c.
struct AlgebraReport {
  int dimension = 0;
  std::vector<std::vector<std::vector<Rational>>> structure_constants;
  bool closed = false;
  /// First pair (a, b), 0-based, whose bracket leaves the span.
  std::optional<std::pair<int, int>> open_pair;
  bool antisymmetric = false;
  bool jacobi = false;
  /// Dimensions of g, [g,g], [[g,g],[g,g]], ... until the series stops
  /// changing.
  std::vector<int> derived_series;
};

/// Thrown for a linearly dependent basis.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraReport closure_check(const MetricModel& model,
                            const std::vector<FrameVectorField>& basis);

/// Jacobi identity for structure constants c[a][b][d].
bool satisfies_jacobi(
    const std::vector<std::vector<std::vector<Rational>>>& c);

/// Kernels of every symmetry kind on one model and their pairwise
/// containments: contains[a][b] is true when space a contains space b.
struct CollineationComparison {
  ModelId model;
  std::vector<SymmetryKind> kinds;
  std::vector<SolutionBasis> spaces;
  std::vector<std::vector<bool>> contains;

  bool equal(SymmetryKind a, SymmetryKind b) const;
  const SolutionBasis& space(SymmetryKind k) const;
};

CollineationComparison compare_collineation_spaces(
    const Geometry& geo, int d_max = kDefaultMaxDegree);

}  // namespace heis
