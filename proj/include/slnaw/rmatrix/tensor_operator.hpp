#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slnaw/core/operator.hpp"
#include "slnaw/core/report.hpp"
#include "slnaw/exactnum/rational_fn.hpp"

namespace slnaw::rmatrix {

using ScalarOperator = Operator<SpectralLaurent>;

/// Product of normalized polynomial factors with multiplicities. A factor is
/// normalized when it has no monomial content and (if its leading coefficient
/// is a constant) leading coefficient 1; sorted by canonical string.
class Denominator {
 public:
  struct Factor {
    SpectralLaurent poly;
    std::string key;
    int multiplicity;
  };

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Splits f = multiplier^{-1} * g with g normalized: returns (g, multiplier)
  /// so that 1/f = multiplier/g. g is empty if f is a monomial times a constant.
  static std::pair<SpectralLaurent, SpectralLaurent> normalize(const SpectralLaurent& f);

  /// Appends factor `g` (already normalized) with multiplicity m.
  void multiply(const SpectralLaurent& g, int m = 1);
  void multiply(const Denominator& other);

  /// Product of all factors with multiplicities.
  SpectralLaurent expand() const;

  /// Least common multiple; `extra_a` and `extra_b` receive the cofactors.
  static Denominator lcm(const Denominator& a, const Denominator& b, SpectralLaurent& extra_a,
                         SpectralLaurent& extra_b);

  std::string to_string() const;
  friend bool operator==(const Denominator& a, const Denominator& b);

 private:
  std::vector<Factor> factors_;
};

/// k-leg operator with rational-function entries over one common denominator.
class TensorOperator {
 public:
  TensorOperator() = default;
  explicit TensorOperator(ScalarOperator numerator, Denominator den = {})
      : num_(std::move(numerator)), den_(std::move(den)) {}

  /// constant matrix times p / (q_1 q_2 ...)
  static TensorOperator scalar_times(const ScalarOperator& matrix, const SpectralLaurent& p,
                                     const std::vector<SpectralLaurent>& den_factors);

  const ScalarOperator& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  int dim() const { return num_.dim(); }
  int legs() const { return num_.legs(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Divides by a scalar polynomial factor.
  TensorOperator divided_by(const SpectralLaurent& f) const;

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  TensorOperator operator-() const { return TensorOperator(-num_, den_); }
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator commutator(const TensorOperator& a, const TensorOperator& b) { return a * b - b * a; }
  /// Scalar multiple.
  TensorOperator scaled(const SpectralLaurent& s) const;

  TensorOperator embed_legs(const std::vector<int>& placement, int total) const {
    return TensorOperator(num_.embed_legs(placement, total), den_);
  }
  TensorOperator transpose_leg(int leg) const { return TensorOperator(num_.transpose_leg(leg), den_); }
  TensorOperator partial_trace(int leg) const { return TensorOperator(num_.partial_trace(leg), den_); }

  TensorOperator substitute(std::size_t v, int sign, const SpectralExponents& image) const;
  TensorOperator specialize(std::size_t v, int value) const;
  TensorOperator rename_into(const Alphabet* target, const std::vector<std::size_t>& mapping) const;
  TensorOperator derivative(std::size_t v) const;

  RationalFn entry(std::uint32_t row, std::uint32_t col) const;
  RationalFn entry(const LegIndex& row, const LegIndex& col) const {
    return entry(num_.flatten(row), num_.flatten(col));
  }

  /// Locates the first nonzero numerator coefficient (entry order, then
  /// monomial order); nullopt if the operator vanishes identically.
  std::optional<Locator> first_nonzero() const;

 private:
  ScalarOperator num_;
  Denominator den_;
};

/// Constant matrix units E_ab (1-based), as one-leg scalar operators.
ScalarOperator matrix_unit(int n, int a, int b, const ParamPoly& c = ParamPoly(1));
/// Kronecker product of one-leg scalar operators.
ScalarOperator kron(const ScalarOperator& a, const ScalarOperator& b);

/// Check that `residual` vanishes identically, with a locator otherwise.
Check zero_check(std::string name, const TensorOperator& residual, std::string note = {});

}  // namespace slnaw::rmatrix
