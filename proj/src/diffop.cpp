#include "heis/diffop.hpp"

#include <stdexcept>
#include <string>

namespace heis {

DiffOp DiffOp::d(int component, std::string_view vars) {
  if (component < 1 || component > 3)
    throw std::invalid_argument("component must be 1, 2 or 3");
  Term t{Poly(1), component - 1, {0, 0, 0}};
  for (char c : vars) {
    if (c < 'x' || c > 'z')
      throw std::invalid_argument(std::string("bad variable '") + c + "'");
    ++t.orders[c - 'x'];
  }
  DiffOp op;
  op.terms_.push_back(std::move(t));
  return op;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += -o; }

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

DiffOp operator*(const Poly& c, const DiffOp& op) {
  DiffOp out = op;
  for (auto& t : out.terms_) t.coeff = c * t.coeff;
  return out;
}

Poly DiffOp::apply(const FrameVectorField& X) const {
  Poly out;
  for (const auto& t : terms_) {
    Poly p = X.f[t.component];
    for (Var v : kAllVars)
      for (int n = 0; n < t.orders[static_cast<int>(v)]; ++n)
        p = p.derivative(v);
    if (!p.is_zero()) out += t.coeff * p;
  }
  return out;
}

}  // namespace heis
