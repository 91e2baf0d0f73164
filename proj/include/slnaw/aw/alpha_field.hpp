#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slnaw/exactnum/param_poly.hpp"

namespace slnaw::aw {

/// Dense univariate polynomial in alpha over Q; c[k] multiplies alpha^k.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long v);  // NOLINT(google-explicit-constructor)
  explicit AlphaPoly(std::vector<Rational> coeffs);

  /// Accepts polynomials in at most one variable (named by the alphabet).
  static AlphaPoly from(const ParamPoly& p);
  ParamPoly to_param(const Alphabet* alphabet) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  AlphaPoly operator-() const;
  AlphaPoly scaled(const Rational& q) const;
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder by a nonzero divisor.
  static std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);
  /// Monic gcd (zero if both are zero).
  static AlphaPoly gcd(AlphaPoly a, AlphaPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(alpha) kept in lowest terms with a monic denominator.
class AlphaFraction {
 public:
  AlphaFraction() : den_(1) {}
  AlphaFraction(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  AlphaFraction(AlphaPoly num);                // NOLINT(google-explicit-constructor)
  AlphaFraction(AlphaPoly num, AlphaPoly den);

  bool is_zero() const { return num_.is_zero(); }
  const AlphaPoly& num() const { return num_; }
  const AlphaPoly& den() const { return den_; }
  /// The polynomial value when the denominator is 1.
  std::optional<AlphaPoly> as_poly() const;

  friend AlphaFraction operator+(const AlphaFraction& a, const AlphaFraction& b);
  friend AlphaFraction operator-(const AlphaFraction& a, const AlphaFraction& b);
  friend AlphaFraction operator*(const AlphaFraction& a, const AlphaFraction& b);
  friend AlphaFraction operator/(const AlphaFraction& a, const AlphaFraction& b);
  AlphaFraction operator-() const { return AlphaFraction(-num_, den_); }
  friend bool operator==(const AlphaFraction& a, const AlphaFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const Alphabet* alphabet) const;

 private:
  AlphaPoly num_;
  AlphaPoly den_;
};

using SparseRow = std::map<int, AlphaFraction>;

/// Row r encodes sum_{c < unknowns} r[c] X_c = sum_{c >= unknowns} r[c] w_{c - unknowns}
/// for vector unknowns X and fixed basis vectors w.
struct LinearSystem {
  int unknowns = 0;
  std::vector<SparseRow> rows;
};

struct LinearSolution {
  /// Unknown -> right-hand-side combination (columns shifted down by `unknowns`).
  std::map<int, SparseRow> values;
  /// Unknowns without a pivot, set to zero in `values`.
  std::vector<int> free_unknowns;
  /// Reduced equations 0 = R (nonzero R) that make the system inconsistent.
  std::vector<SparseRow> inconsistent;
  std::size_t equations = 0;
  bool consistent() const { return inconsistent.empty(); }
  bool unique() const { return free_unknowns.empty(); }
};

/// Gauss-Jordan elimination over Q(alpha); deterministic pivot order
/// (columns ascending, sparsest row first, then lowest row index).
LinearSolution solve(LinearSystem system);

/// Rank over Q(alpha) of the given rows.
int rank(std::vector<SparseRow> rows);

}  // namespace slnaw::aw
