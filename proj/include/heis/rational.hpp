#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace heis {

/// Exact rational number. Arithmetic on canonical operands stays canonical
/// (positive denominator, reduced); the two-argument constructor does not
/// reduce, so Poly and to_string canonicalize what they are given.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace heis
