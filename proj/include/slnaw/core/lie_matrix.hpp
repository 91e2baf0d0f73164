#pragma once

#include <functional>
#include <optional>
#include <string>

#include "slnaw/core/operator.hpp"
#include "slnaw/core/report.hpp"
#include "slnaw/exactnum/laurent.hpp"

namespace slnaw {

/// Operator whose entries are Laurent polynomials with Lie-algebra
/// coefficients, i.e. an element of End((C^N)^{⊗k}) ⊗ g[x^{±1}, ...].
template <class E>
using LieMatrix = Operator<Laurent<E>>;

/// scalar * Lie-valued (scalars commute with Lie elements).
template <class E>
LieMatrix<E> scalar_left(const Operator<SpectralLaurent>& s, const LieMatrix<E>& m) {
  return multiply<Laurent<E>>(s, m, [](const SpectralLaurent& a, const Laurent<E>& b) { return a * b; });
}

template <class E>
LieMatrix<E> scalar_right(const LieMatrix<E>& m, const Operator<SpectralLaurent>& s) {
  return multiply<Laurent<E>>(m, s, [](const Laurent<E>& a, const SpectralLaurent& b) { return b * a; });
}

/// [A, S] for Lie-valued A and scalar S: A S - S A.
template <class E>
LieMatrix<E> scalar_commutator(const LieMatrix<E>& a, const Operator<SpectralLaurent>& s) {
  return scalar_right(a, s) - scalar_left(s, a);
}

/// Entrywise scalar multiple.
template <class E>
LieMatrix<E> scale(const LieMatrix<E>& m, const SpectralLaurent& s) {
  return m.template map<Laurent<E>>([&](const Laurent<E>& v) { return s * v; });
}

/// [A_1, B_2] for one-leg A, B placed on legs 1 and 2: entry ((a,b),(c,d))
/// is the Lie bracket [A_ac, B_bd].
template <class E, class Bracket>
LieMatrix<E> leg_bracket(const LieMatrix<E>& a, const LieMatrix<E>& b, Bracket&& bracket) {
  if (a.legs() != 1 || b.legs() != 1) throw ConfigurationError("leg_bracket expects one-leg operators");
  const auto n = static_cast<std::uint32_t>(a.dim());
  LieMatrix<E> r(a.dim(), 2);
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      r.add(ka.first * n + kb.first, ka.second * n + kb.second, bilinear(va, vb, bracket));
    }
  }
  return r;
}

/// First entry/monomial where `diff` is nonzero among monomials accepted by
/// `in_window`; entries in row-major order, monomials in exponent order.
template <class E>
std::optional<Locator> first_difference(const LieMatrix<E>& diff,
                                        const std::function<bool(const SpectralExponents&)>& in_window,
                                        const std::function<std::string(const E&)>& render) {
  for (const auto& [key, series] : diff.entries()) {
    for (const auto& [mono, coeff] : series.terms()) {
      if (!in_window(mono)) continue;
      return Locator{entry_locator(diff.dim(), diff.legs(), key.first, key.second),
                     monomial_locator(series.vars(), mono), render(coeff)};
    }
  }
  return std::nullopt;
}

}  // namespace slnaw
