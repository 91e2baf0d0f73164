#include "slnaw/exactnum/laurent.hpp"

#include "slnaw/exactnum/rational_fn.hpp"

namespace slnaw {

SpectralLaurent operator*(const SpectralLaurent& a, const SpectralLaurent& b) {
  SpectralLaurent r(unify(a.vars(), b.vars()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term(SpectralLaurent::add_exps(ea, eb), ca * cb);
    }
  }
  return r;
}

SpectralLaurent spectral_constant(const ParamPoly& c) { return SpectralLaurent::constant(c); }

SpectralLaurent spectral_monomial(const Alphabet* vars, SpectralExponents e, const ParamPoly& c) {
  return SpectralLaurent::monomial(vars, e, c);
}

SpectralLaurent spectral_variable(const Alphabet* vars, std::string_view name) {
  SpectralExponents e{};
  e.at(vars->require(name)) = 1;
  return SpectralLaurent::monomial(vars, e, ParamPoly(1));
}

std::vector<std::pair<std::string, int>> monomial_locator(const Alphabet* vars, const SpectralExponents& e) {
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t i = 0; i < kMaxSpectral; ++i) {
    if (e[i] == 0) continue;
    std::string name = (vars != nullptr && i < vars->size()) ? vars->name(i) : ("t" + std::to_string(i));
    out.emplace_back(std::move(name), e[i]);
  }
  return out;
}

std::string to_string(const SpectralLaurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (const auto& [name, k] : monomial_locator(p.vars(), e)) {
      s += "*" + name;
      if (k != 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

RationalFn::RationalFn(SpectralLaurent n, SpectralLaurent d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den == b.den) return RationalFn(a.num + b.num, a.den);
  return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  if (a.den == b.den) return RationalFn(a.num - b.num, a.den);
  return RationalFn(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) { return RationalFn(a.num * b.num, a.den * b.den); }

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return RationalFn(a.num * b.den, a.den * b.num); }

bool operator==(const RationalFn& a, const RationalFn& b) { return (a.num * b.den - b.num * a.den).is_zero(); }

RationalFn RationalFn::derivative(std::size_t v) const {
  return RationalFn(num.derivative(v) * den - num * den.derivative(v), den * den);
}

RationalFn RationalFn::substitute(std::size_t v, int sign, const SpectralExponents& image) const {
  return RationalFn(num.substitute(v, sign, image), den.substitute(v, sign, image));
}

std::string RationalFn::to_string() const {
  return "(" + slnaw::to_string(num) + ")/(" + slnaw::to_string(den) + ")";
}

}  // namespace slnaw
