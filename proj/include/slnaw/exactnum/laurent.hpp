#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slnaw/exactnum/alphabet.hpp"
#include "slnaw/exactnum/errors.hpp"
#include "slnaw/exactnum/param_poly.hpp"

namespace slnaw {

/// Maximum number of spectral variables in one Laurent polynomial (x1, x2, x3).
inline constexpr std::size_t kMaxSpectral = 3;
using SpectralExponents = std::array<int, kMaxSpectral>;

/// Laurent polynomial in up to three spectral variables with coefficients in C.
/// C is ParamPoly for scalars, or a Lie-algebra element type (LinComb) for
/// generating matrices. Zero coefficients are never stored.
template <class C>
class Laurent {
 public:
  using Terms = std::map<SpectralExponents, C>;

  Laurent() = default;
  explicit Laurent(const Alphabet* vars) : vars_(vars) {}

  static Laurent constant(C value) {
    Laurent r;
    r.add_term({}, std::move(value));
    return r;
  }
  static Laurent monomial(const Alphabet* vars, SpectralExponents e, C value) {
    Laurent r(vars);
    r.add_term(e, std::move(value));
    return r;
  }

  const Alphabet* vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the monomial `e` (zero if absent).
  C coeff(const SpectralExponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const SpectralExponents& e, const C& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    vars_ = unify(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    vars_ = unify(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  /// Multiplies every coefficient by a parameter polynomial.
  Laurent scaled(const ParamPoly& s) const {
    Laurent r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, s * c);
    return r;
  }

  /// Multiplies by the monomial x^shift.
  Laurent shifted(const SpectralExponents& shift) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(add_exps(e, shift), c);
    return r;
  }

  /// Highest / lowest exponent of variable `v` (0 for the zero polynomial).
  int max_degree(std::size_t v) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] > d) d = e[v];
      first = false;
    }
    return d;
  }
  int min_degree(std::size_t v) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] < d) d = e[v];
      first = false;
    }
    return d;
  }

  /// Substitutes variable `v` by sign * prod_w x_w^{image[w]}; the image must
  /// not involve v itself unless it is the pure inversion x_v -> ±x_v^k.
  Laurent substitute(std::size_t v, int sign, const SpectralExponents& image) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      SpectralExponents out = e;
      int k = e[v];
      out[v] = 0;
      for (std::size_t w = 0; w < kMaxSpectral; ++w) out[w] += k * image[w];
      if (sign < 0 && (k % 2 != 0)) {
        r.add_term(out, -c);
      } else {
        r.add_term(out, c);
      }
    }
    return r;
  }

  /// d/dx_v.
  Laurent derivative(std::size_t v) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      SpectralExponents out = e;
      out[v] -= 1;
      r.add_term(out, c.scaled_by(Rational(e[v])));
    }
    return r;
  }

  /// x_v d/dx_v (keeps the exponent lattice unchanged).
  Laurent euler_derivative(std::size_t v) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != 0) r.add_term(e, c.scaled_by(Rational(e[v])));
    }
    return r;
  }

  /// Sets x_v = value (±1) and drops v.
  Laurent specialize(std::size_t v, int value) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      SpectralExponents out = e;
      out[v] = 0;
      if (value < 0 && (e[v] % 2 != 0)) {
        r.add_term(out, -c);
      } else {
        r.add_term(out, c);
      }
    }
    return r;
  }

  /// Multiplies all exponents of `v` by `factor` (x -> x^factor).
  Laurent scale_exponents(std::size_t v, int factor) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      SpectralExponents out = e;
      out[v] *= factor;
      r.terms_.emplace(out, c);
    }
    return r;
  }

  /// Inverse of scale_exponents(v, 2); throws UnsupportedError on odd exponents.
  Laurent halve_exponents(std::size_t v) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] % 2 != 0) throw UnsupportedError("half-integer exponent survives in " + vars_->name(v));
      SpectralExponents out = e;
      out[v] /= 2;
      r.terms_.emplace(out, c);
    }
    return r;
  }

  /// Moves the polynomial into alphabet `target`: source variable i becomes
  /// target variable mapping[i].
  Laurent rename_into(const Alphabet* target, const std::vector<std::size_t>& mapping) const {
    Laurent r(target);
    for (const auto& [e, c] : terms_) {
      SpectralExponents out{};
      for (std::size_t i = 0; i < mapping.size(); ++i) out[mapping[i]] += e[i];
      r.add_term(out, c);
    }
    return r;
  }

  /// Keeps only terms satisfying `keep`.
  Laurent filtered(const std::function<bool(const SpectralExponents&)>& keep) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      if (keep(e)) r.terms_.emplace(e, c);
    }
    return r;
  }

  static SpectralExponents add_exps(const SpectralExponents& a, const SpectralExponents& b) {
    SpectralExponents r{};
    for (std::size_t i = 0; i < kMaxSpectral; ++i) r[i] = a[i] + b[i];
    return r;
  }

 private:
  const Alphabet* vars_ = nullptr;
  Terms terms_;
};

/// Product of a scalar Laurent polynomial with a C-valued one. C must support
/// ParamPoly * C.
template <class C>
Laurent<C> operator*(const Laurent<ParamPoly>& s, const Laurent<C>& a) {
  Laurent<C> r(unify(s.vars(), a.vars()));
  if (s.is_zero() || a.is_zero()) return r;
  for (const auto& [es, cs] : s.terms()) {
    for (const auto& [ea, ca] : a.terms()) {
      r.add_term(Laurent<C>::add_exps(es, ea), cs * ca);
    }
  }
  return r;
}

/// Product of C-valued Laurent polynomials via a bilinear map on coefficients
/// (a Lie bracket, say).
template <class C, class F>
Laurent<C> bilinear(const Laurent<C>& a, const Laurent<C>& b, F&& product) {
  Laurent<C> r(unify(a.vars(), b.vars()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term(Laurent<C>::add_exps(ea, eb), product(ca, cb));
    }
  }
  return r;
}

using SpectralLaurent = Laurent<ParamPoly>;

SpectralLaurent operator*(const SpectralLaurent& a, const SpectralLaurent& b);

/// Convenience constructors for scalars over a spectral alphabet.
SpectralLaurent spectral_constant(const ParamPoly& c);
SpectralLaurent spectral_monomial(const Alphabet* vars, SpectralExponents e, const ParamPoly& c = ParamPoly(1));
SpectralLaurent spectral_variable(const Alphabet* vars, std::string_view name);

/// Canonical rendering, terms in increasing exponent order: "(2)*x^-1*y + (alpha)".
std::string to_string(const SpectralLaurent& p);

/// Locator form of a monomial: [(name, exponent), ...], zero exponents omitted.
std::vector<std::pair<std::string, int>> monomial_locator(const Alphabet* vars, const SpectralExponents& e);

}  // namespace slnaw
