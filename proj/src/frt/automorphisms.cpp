#include "slnaw/frt/automorphisms.hpp"

#include "slnaw/exactnum/errors.hpp"

namespace slnaw::frt {

using loop::Element;
using loop::RawTerm;
using loop::Symbol;

loop::Element LoopAutomorphism::apply(const loop::Element& e) const {
  Element r;
  for (const auto& [s, c] : e.terms()) r += c * on_basis_(s);
  return r;
}

LoopAutomorphism theta1(const loop::LoopAlgebra& alg, int sign_offset) {
  const int n = alg.n();
  return LoopAutomorphism("theta1", [&alg, n, sign_offset](const Symbol& s) {
    if (s.kind == Symbol::Kind::Central) return Element(Symbol::central(), ParamPoly(-1));
    std::vector<RawTerm> out;
    for (const auto& t : alg.expand(s)) {
      const int sign = sign_power(static_cast<long>(n) * t.level + t.i + t.j + sign_offset);
      out.push_back({t.j, t.i, -t.level, t.weight * sign});
    }
    return alg.canonicalize(out);
  });
}

LoopAutomorphism theta2(const loop::LoopAlgebra& alg, int epsilon) {
  const int n = alg.n();
  if (n % 2 != 0) throw UnsupportedError("theta2 requires even N");
  if (epsilon != 1 && epsilon != -1) throw ConfigurationError("epsilon must be +1 or -1");
  const int half = n / 2;
  return LoopAutomorphism("theta2", [&alg, half, epsilon](const Symbol& s) {
    if (s.kind == Symbol::Kind::Central) return Element(Symbol::central(), ParamPoly(-1));
    auto bar = [half](int i) { return i <= half ? i + half : i - half; };
    auto upper = [half](int i) { return i <= half; };
    std::vector<RawTerm> out;
    Rational central = 0;
    for (const auto& t : alg.expand(s)) {
      if (upper(t.i) == upper(t.j)) {
        out.push_back({bar(t.j), bar(t.i), -t.level, -t.weight});
        if (t.i == t.j && t.level == 0) central += t.weight * (upper(t.i) ? 1 : -1) / Rational(2);
      } else if (upper(t.i)) {
        out.push_back({bar(t.j), bar(t.i), -t.level + 1, -epsilon * t.weight});
      } else {
        out.push_back({bar(t.j), bar(t.i), -t.level - 1, -epsilon * t.weight});
      }
    }
    return alg.canonicalize(out, central);
  });
}

Check check_morphism(const loop::LoopAlgebra& alg, const LoopAutomorphism& theta, int max_level) {
  auto basis = alg.basis(max_level);
  std::vector<Element> images;
  images.reserve(basis.size());
  for (const auto& s : basis) images.push_back(theta.apply(s));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Element lhs = theta.apply(alg.basis_bracket(basis[a], basis[b]));
      Element rhs = alg.bracket(images[a], images[b]);
      if (!(lhs == rhs)) {
        return Check::fail(theta.name() + " bracket morphism",
                           Locator{"[" + basis[a].name() + ", " + basis[b].name() + "]", {}, loop::to_string(lhs - rhs)});
      }
    }
  }
  return Check::pass(theta.name() + " bracket morphism",
                     std::to_string(basis.size()) + " basis symbols, |level| <= " + std::to_string(max_level));
}

Check check_involution(const loop::LoopAlgebra& alg, const LoopAutomorphism& theta, int max_level) {
  for (const auto& s : alg.basis(max_level)) {
    Element twice = theta.apply(theta.apply(s));
    if (!(twice == Element(s))) {
      return Check::fail(theta.name() + " involution", Locator{s.name(), {}, loop::to_string(twice - Element(s))});
    }
  }
  return Check::pass(theta.name() + " involution");
}

}  // namespace slnaw::frt
