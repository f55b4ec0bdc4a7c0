#pragma once

#include "heis/models.hpp"

#include <map>
#include <string>
#include <vector>

namespace heis {

enum class CausalClass {
  Spacelike,
  Timelike,
  Null,
  Zero,
  SignChanging,
  InconclusiveOnGrid,
};

std::string causal_name(CausalClass c);

struct Witness {
  Point3 point;
  int sign;
};

/// Grid evidence: unless `certified`, a spacelike or timelike verdict means
/// every sampled point had that sign, not that the sign holds everywhere.
struct CausalReport {
  Poly norm_squared;
  CausalClass classification;
  std::vector<Witness> witnesses;
  /// Exact certificate that the sign holds at every point: all terms are
  /// even monomials whose coefficients share the sign of a nonzero constant.
  bool certified = false;
};

/// +1 or -1 when p certifiably has that strict sign everywhere, else 0.
int certified_sign(const Poly& p);

/// sum_i eps_i f_i^2. Throws std::invalid_argument for the Riemannian G0.
Poly norm_squared(const MetricModel& model, const FrameVectorField& X);

/// {-3, -3/2, 0, 3/2, 3}^3.
std::vector<Point3> default_grid();

/// Classification from the exact norm polynomial and its signs on `grid`.
/// Null requires the norm to vanish identically for a nonzero X. When all
/// samples share a weak sign and some vanish, the result is
/// InconclusiveOnGrid and every vanishing sample is listed as a witness.
CausalReport classify(const MetricModel& model, const FrameVectorField& X,
                      const std::vector<Point3>& grid);

/// {-2, ..., 2}^n without the zero tuple, in lexicographic order.
std::vector<std::vector<Rational>> default_coefficient_grid(int n);

struct ScanSummary {
  int total = 0;
  std::map<CausalClass, int> counts;
  int count(CausalClass c) const;
};

ScanSummary scan_combinations(const MetricModel& model,
                              const std::vector<FrameVectorField>& basis,
                              const std::vector<std::vector<Rational>>& coeffs,
                              const std::vector<Point3>& grid);

}  // namespace heis
