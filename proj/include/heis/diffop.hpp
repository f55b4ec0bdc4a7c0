#pragma once

#include "heis/models.hpp"

#include <string_view>
#include <vector>

namespace heis {

/// Linear differential expression in the frame components f1, f2, f3 with
/// polynomial coefficients, e.g. x*d2f1/dydz - lambda*f2. Used to write
/// hand-derived component formulas down as data and compare them against
/// the operators on a monomial basis.
class DiffOp {
 public:
  struct Term {
    Poly coeff;
    int component;  // 0-based
    Array3<int> orders;
  };

  DiffOp() = default;

  /// The derivative of f_component (1-based) named by `vars`, e.g.
  /// d(2, "xz") is d2f2/dxdz and d(3, "") is f3 itself.
  static DiffOp d(int component, std::string_view vars);

  const std::vector<Term>& terms() const { return terms_; }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  friend DiffOp operator*(const Poly& c, const DiffOp& op);

  Poly apply(const FrameVectorField& X) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace heis
