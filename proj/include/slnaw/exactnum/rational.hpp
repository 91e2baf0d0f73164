#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slnaw {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// p/q in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optional leading sign); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// (-1)^k for any integer k.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace slnaw
