#pragma once

#include "heis/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace heis {

enum class Var { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::X, Var::Y, Var::Z};

/// x^a y^b z^c.
struct Monomial {
  std::array<int, 3> exps{0, 0, 0};

  Monomial() = default;
  Monomial(int a, int b, int c) : exps{a, b, c} {}

  int degree() const { return exps[0] + exps[1] + exps[2]; }
  int operator[](Var v) const { return exps[static_cast<int>(v)]; }

  Monomial operator*(const Monomial& o) const {
    return {exps[0] + o.exps[0], exps[1] + o.exps[1], exps[2] + o.exps[2]};
  }

  bool operator==(const Monomial&) const = default;

  // Graded lexicographic with x > y > z: higher total degree is larger,
  // ties broken by comparing exponents of x, then y, then z.
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return exps <=> o.exps;
  }
};

/// All monomials of total degree <= d, in descending graded-lex order.
std::vector<Monomial> monomials_up_to(int d);

struct Point3 {
  Rational x, y, z;
};

/// Multivariate polynomial over Q in x, y, z.
///
/// Terms are held in descending graded-lex order and zero coefficients are
/// never stored, so two equal polynomials always have identical term maps.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: implicit constants read naturally
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT

  static Poly var(Var v);
  static Poly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& scale(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Adds c*m in place. c need not be in lowest terms.
  void add_term(const Monomial& m, const Rational& c);

  Poly derivative(Var v) const;
  Poly pow(int n) const;
  Rational evaluate(const Point3& p) const;

  /// Canonical text: "c*x^a*y^b*z^c" terms joined by " + ", e.g.
  /// "1/2*x^2 + -2*y + 3". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  // add_term for a coefficient already in canonical form.
  void accumulate(const Monomial& m, const Rational& c);

  TermMap terms_;
};

Poly partial_derivative(const Poly& p, Var v);
Rational evaluate(const Poly& p, const Point3& point);

/// Parses sums/products/powers of rationals and x, y, z with parentheses,
/// e.g. "x^2 - 1/4*y*(z + 2)". Accepts the canonical text form.
/// Throws std::invalid_argument on malformed input.
Poly parse_poly(std::string_view text);

}  // namespace heis
