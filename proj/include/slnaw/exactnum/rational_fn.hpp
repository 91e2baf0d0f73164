#pragma once

#include <string>

#include "slnaw/exactnum/laurent.hpp"

namespace slnaw {

/// Unreduced quotient of spectral Laurent polynomials. No gcd is ever taken;
/// equality is decided by cross-multiplication.
struct RationalFn {
  SpectralLaurent num;
  SpectralLaurent den;

  RationalFn() : den(spectral_constant(ParamPoly(1))) {}
  RationalFn(SpectralLaurent n, SpectralLaurent d);
  static RationalFn from(const SpectralLaurent& p) { return RationalFn(p, spectral_constant(ParamPoly(1))); }

  bool is_zero() const { return num.is_zero(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn operator-() const { return RationalFn(-num, den); }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

  /// Quotient-rule derivative in variable v.
  RationalFn derivative(std::size_t v) const;
  RationalFn substitute(std::size_t v, int sign, const SpectralExponents& image) const;

  std::string to_string() const;
};

}  // namespace slnaw
