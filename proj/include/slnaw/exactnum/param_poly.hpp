#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slnaw/exactnum/alphabet.hpp"
#include "slnaw/exactnum/rational.hpp"

namespace slnaw {

/// Product of parameter powers, stored as (variable index, exponent) pairs
/// sorted by variable index, exponents > 0. The empty monomial is 1.
class ParamMonomial {
 public:
  using Factor = std::pair<std::uint16_t, std::uint32_t>;

  ParamMonomial() = default;
  static ParamMonomial variable(std::size_t index, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::size_t index) const;

  /// Product, reducing exponents of involutive variables modulo 2.
  static ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b,
                                const Alphabet* alphabet);

  std::string to_string(const Alphabet* alphabet) const;

  auto operator<=>(const ParamMonomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Multivariate polynomial with exact rational coefficients in the formal
/// parameters of an alphabet (alpha, mu_i, kappa_ij, ...). Terms are kept
/// sorted by monomial with no zero coefficients, so equality is structural.
class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(long value);  // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static ParamPoly variable(const Alphabet* alphabet, std::size_t index);
  static ParamPoly variable(const Alphabet* alphabet, std::string_view name);
  static ParamPoly term(const Alphabet* alphabet, ParamMonomial m, Rational c);

  /// Parses the canonical form produced by to_string(); names must belong to
  /// `alphabet` (which may be null for constants).
  static ParamPoly parse(std::string_view text, const Alphabet* alphabet);

  const Alphabet* alphabet() const { return alphabet_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// The value if the polynomial is a constant.
  std::optional<Rational> as_constant() const;
  std::uint32_t total_degree() const;
  /// Degree in variable `index`.
  std::uint32_t degree_in(std::size_t index) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly operator-() const;
  ParamPoly scaled_by(const Rational& q) const;

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Quotient if `divisor` divides this polynomial exactly (graded-lex
  /// division); nullopt otherwise. Involutive variables are not supported.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  /// Canonical rendering; terms in increasing monomial order, e.g.
  /// "-1 + 2*alpha^2".
  std::string to_string() const;

  /// Total order used to sort polynomials deterministically.
  friend std::strong_ordering compare(const ParamPoly& a, const ParamPoly& b);

 private:
  void merge(const ParamPoly& other, int sign);
  const Alphabet* alphabet_ = nullptr;
  std::vector<Term> terms_;
};

}  // namespace slnaw
