#pragma once

#include "heis/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace heis {

/// Sparse row: (column, value) pairs with strictly increasing columns and
/// no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;
using DenseVector = std::vector<Rational>;

SparseRow to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseRow& r, int ncols);

/// Incremental fraction-free row echelon form.
///
/// Rows are scaled to primitive integer vectors on entry. A new row is
/// reduced against the stored rows by cross-multiplication on leading
/// entries (p*r - a*P, then content removal), so no fractions appear.
/// The pivot is always the first nonzero column of the reduced row.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(int ncols) : ncols_(ncols) {}

  /// Returns true when the row was linearly independent of earlier rows.
  bool add_row(const SparseRow& row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }

  /// Reduced row echelon form over Q: leading 1s, zeros above and below
  /// every pivot, rows ordered by pivot column.
  std::vector<SparseRow> reduced() const;

 private:
  using IntRow = std::vector<std::pair<int, Integer>>;
  int ncols_;
  std::map<int, IntRow> pivots_;  // keyed by leading column
};

int rank(const std::vector<SparseRow>& rows, int ncols);

/// RREF of the row space of `rows` (zero rows dropped).
std::vector<SparseRow> rref(const std::vector<SparseRow>& rows, int ncols);

/// Basis of { v : row . v = 0 for every row }, normalized to RREF.
std::vector<SparseRow> kernel_basis(const std::vector<SparseRow>& rows,
                                    int ncols);

/// Coefficients c with sum_k c_k * vectors[k] == target, if any exist.
/// With dependent `vectors` the solution sets free coefficients to zero.
std::optional<DenseVector> solve_combination(
    const std::vector<SparseRow>& vectors, const SparseRow& target, int ncols);

/// Rank over Z/pZ for the prime p = 2^61 - 1; rational entries are mapped
/// through modular inverses of their denominators. Returns nullopt if some
/// denominator vanishes mod p.
std::optional<int> rank_mod_prime(const std::vector<SparseRow>& rows,
                                  int ncols);

inline constexpr std::uint64_t kCheckPrime = (std::uint64_t{1} << 61) - 1;

}  // namespace heis
