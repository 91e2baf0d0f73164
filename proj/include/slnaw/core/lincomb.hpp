#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "slnaw/exactnum/param_poly.hpp"

namespace slnaw {

/// Finite linear combination of basis keys with ParamPoly coefficients. Used
/// for elements of every Lie algebra in the library. Zero coefficients are
/// never stored, so equality is structural.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, ParamPoly>;

  LinComb() = default;
  explicit LinComb(const Key& k, ParamPoly c = ParamPoly(1)) { add_term(k, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ParamPoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ParamPoly() : it->second;
  }

  void add_term(const Key& k, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinComb operator-() const {
    LinComb r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  LinComb scaled_by(const Rational& q) const {
    LinComb r;
    if (q == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled_by(q));
    return r;
  }

  friend LinComb operator*(const ParamPoly& s, const LinComb& a) {
    LinComb r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
  }

  /// Linear extension of a map on basis keys.
  template <class Out, class F>
  Out map_linear(F&& image) const {
    Out r;
    for (const auto& [k, c] : terms_) r += c * image(k);
    return r;
  }

  /// Bilinear extension of a bracket on basis keys.
  template <class F>
  friend LinComb bilinear_extend(const LinComb& a, const LinComb& b, F&& basis_bracket) {
    LinComb r;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        LinComb t = basis_bracket(ka, kb);
        if (t.is_zero()) continue;
        r += (ca * cb) * t;
      }
    }
    return r;
  }

  /// "coeff*name + ..." with keys rendered by `name`; "0" when empty.
  std::string to_string(const std::function<std::string(const Key&)>& name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + name(k);
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace slnaw
