#include "slnaw/loop/loop_algebra.hpp"

#include <map>

#include "slnaw/exactnum/errors.hpp"

namespace slnaw::loop {

std::string Symbol::name() const {
  switch (kind) {
    case Kind::Central:
      return "c";
    case Kind::OffDiag:
      return "e(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(level) + ")";
    case Kind::Cartan:
      return "h(" + std::to_string(i) + ";" + std::to_string(level) + ")";
  }
  return "?";
}

std::string to_string(const Element& e) {
  return e.to_string([](const Symbol& s) { return s.name(); });
}

LoopAlgebra::LoopAlgebra(int n) : n_(n) {
  if (n < 2) throw ConfigurationError("loop algebra needs N >= 2");
}

void LoopAlgebra::check_index(int i) const {
  if (i < 1 || i > n_) throw IndexError("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

Element LoopAlgebra::inject(int i, int j, int level) const {
  check_index(i);
  check_index(j);
  if (i != j) return Element(Symbol::off_diag(i, j, level));
  return canonicalize({RawTerm{i, i, level, Rational(1)}});
}

Element LoopAlgebra::cartan(int i, int level) const {
  if (i < 1 || i >= n_) throw IndexError("Cartan index outside 1..N-1");
  return Element(Symbol::cartan(i, level));
}

std::vector<RawTerm> LoopAlgebra::expand(const Symbol& s) const {
  switch (s.kind) {
    case Symbol::Kind::Central:
      return {};
    case Symbol::Kind::OffDiag:
      return {RawTerm{s.i, s.j, s.level, Rational(1)}};
    case Symbol::Kind::Cartan:
      return {RawTerm{s.i, s.i, s.level, Rational(1)}, RawTerm{s.i + 1, s.i + 1, s.level, Rational(-1)}};
  }
  return {};
}

Element LoopAlgebra::canonicalize(const std::vector<RawTerm>& raw, const Rational& central_weight) const {
  Element out;
  if (central_weight != 0) out.add_term(Symbol::central(), ParamPoly(central_weight));
  std::map<int, std::vector<Rational>> diagonal;
  for (const auto& t : raw) {
    if (t.weight == 0) continue;
    if (t.i != t.j) {
      out.add_term(Symbol::off_diag(t.i, t.j, t.level), ParamPoly(t.weight));
      continue;
    }
    auto& d = diagonal[t.level];
    if (d.empty()) d.assign(static_cast<std::size_t>(n_), Rational(0));
    d[static_cast<std::size_t>(t.i - 1)] += t.weight;
  }
  // Coefficient of h_k in sum_i d_i e_ii is S_k - (k/N) T with S_k the partial sum.
  for (const auto& [level, d] : diagonal) {
    Rational total = 0;
    for (const auto& v : d) total += v;
    Rational partial = 0;
    for (int k = 1; k < n_; ++k) {
      partial += d[static_cast<std::size_t>(k - 1)];
      Rational coeff = partial - Rational(k) * total / n_;
      if (coeff != 0) out.add_term(Symbol::cartan(k, level), ParamPoly(coeff));
    }
  }
  return out;
}

Element LoopAlgebra::basis_bracket(const Symbol& a, const Symbol& b) const {
  if (a.kind == Symbol::Kind::Central || b.kind == Symbol::Kind::Central) return {};
  std::vector<RawTerm> raw;
  Rational central = 0;
  for (const auto& x : expand(a)) {
    for (const auto& y : expand(b)) {
      const Rational w = x.weight * y.weight;
      const int m = x.level;
      const int total = x.level + y.level;
      if (x.j == y.i) raw.push_back({x.i, y.j, total, w});
      if (x.i == y.j) raw.push_back({y.i, x.j, total, -w});
      if (total == 0 && m != 0) {
        Rational delta = 0;
        if (x.i == y.j && x.j == y.i) delta += 1;
        if (x.i == x.j && y.i == y.j) delta -= Rational(1, n_);
        central += w * m * delta;
      }
    }
  }
  return canonicalize(raw, central);
}

Element LoopAlgebra::bracket(const Element& a, const Element& b) const {
  return bilinear_extend(a, b, [this](const Symbol& s, const Symbol& t) { return basis_bracket(s, t); });
}

Element LoopAlgebra::jacobi_residual(const Element& a, const Element& b, const Element& c) const {
  return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
}

std::vector<Symbol> LoopAlgebra::basis(int max_level) const {
  std::vector<Symbol> out{Symbol::central()};
  for (int level = -max_level; level <= max_level; ++level) {
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        if (i != j) out.push_back(Symbol::off_diag(i, j, level));
      }
    }
    for (int i = 1; i < n_; ++i) out.push_back(Symbol::cartan(i, level));
  }
  return out;
}

}  // namespace slnaw::loop
