#include "slnaw/frt/generators.hpp"

#include "slnaw/rmatrix/r_matrix.hpp"

namespace slnaw::frt {

using loop::Element;
using loop::LoopAlgebra;
using rmatrix::ScalarOperator;
using rmatrix::TensorOperator;

namespace {

const Alphabet* vars() { return rmatrix::two_point_vars(); }

LoopSeries mono(int exponent, const Element& e) { return LoopSeries::monomial(vars(), {exponent, 0, 0}, e); }

std::string render(const Element& e) { return loop::to_string(e); }

/// Scalar operator times the central element.
LoopMatrix central_matrix(const ScalarOperator& s) {
  return s.map<LoopSeries>([](const SpectralLaurent& p) {
    LoopSeries out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Element(loop::Symbol::central(), c));
    return out;
  });
}

ScalarOperator u_conj_matrix(int n) { return rmatrix::u_matrix(n); }

}  // namespace

GeneratorMatrix build_T(const LoopAlgebra& alg, int sign, int cutoff) {
  if (sign != 1 && sign != -1) throw ConfigurationError("generator matrix sign must be +1 or -1");
  if (cutoff < 1) throw ConfigurationError("cutoff must be >= 1");
  const int n = alg.n();
  GeneratorMatrix t{n, sign, cutoff, LoopMatrix(n, 1)};
  const ParamPoly two(2 * sign);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto row = static_cast<std::uint32_t>(i - 1);
      const auto col = static_cast<std::uint32_t>(j - 1);
      if (i == j) {
        t.entries.add(row, col, mono(0, ParamPoly(sign) * alg.inject(i, i, 0)));
      } else if ((sign > 0 && i < j) || (sign < 0 && j < i)) {
        t.entries.add(row, col, mono(0, two * alg.inject(j, i, 0)));
      }
      for (int level = 1; level <= cutoff; ++level) {
        t.entries.add(row, col, mono(sign * level, two * alg.inject(j, i, sign * level)));
      }
    }
  }
  return t;
}

LoopMatrix apply_entrywise(const LoopMatrix& m, const LoopAutomorphism& theta) {
  return m.map<LoopSeries>([&](const LoopSeries& s) {
    LoopSeries out(s.vars());
    for (const auto& [e, c] : s.terms()) out.add_term(e, theta.apply(c));
    return out;
  });
}

LoopMatrix in_y(const LoopMatrix& m) {
  return m.map<LoopSeries>([](const LoopSeries& s) { return s.rename_into(vars(), {1, 0}); });
}

std::pair<LoopMatrix, SpectralLaurent> frt_residual(const LoopAlgebra& alg, const LoopMatrix& t1, const LoopMatrix& t2,
                                                    bool central) {
  auto bracket = [&alg](const Element& a, const Element& b) { return alg.bracket(a, b); };
  LoopMatrix ty = in_y(t2);
  LoopMatrix lhs = leg_bracket(t1, ty, bracket);
  LoopMatrix both = t1.embed_legs({1}, 2) + ty.embed_legs({2}, 2);
  TensorOperator r = rmatrix::build_r(alg.n());
  if (!central) {
    SpectralLaurent clear = r.denominator().expand();
    return {scale(lhs, clear) - scalar_commutator(both, r.numerator()), clear};
  }
  // x d/dx r(x/y) = (x/y) r'(x/y)
  TensorOperator euler = r.derivative(0).scaled(spectral_variable(vars(), "x"));
  SpectralLaurent ea;
  SpectralLaurent eb;
  rmatrix::Denominator master = rmatrix::Denominator::lcm(r.denominator(), euler.denominator(), ea, eb);
  SpectralLaurent clear = master.expand();
  ScalarOperator r_cleared = r.numerator().map<SpectralLaurent>([&](const SpectralLaurent& p) { return ea * p; });
  ScalarOperator e_cleared =
      euler.numerator().map<SpectralLaurent>([&](const SpectralLaurent& p) { return eb.scaled(ParamPoly(2)) * p; });
  return {scale(lhs, clear) - scalar_commutator(both, r_cleared) + central_matrix(e_cleared), clear};
}

Check window_check(std::string name, const LoopMatrix& residual, const SpectralLaurent& clearing, int cutoff) {
  const int bx = cutoff - clearing.max_degree(0);
  const int by = cutoff - clearing.max_degree(1);
  if (bx < 0 || by < 0) {
    throw ConfigurationError("empty truncation window: cutoff " + std::to_string(cutoff) +
                             " is below the clearing degree");
  }
  auto in_window = [bx, by](const SpectralExponents& e) { return std::abs(e[0]) <= bx && std::abs(e[1]) <= by; };
  std::string note = "window |x| <= " + std::to_string(bx) + ", |y| <= " + std::to_string(by);
  if (auto loc = first_difference<Element>(residual, in_window, render)) {
    return Check::fail(std::move(name), *loc, note);
  }
  return Check::pass(std::move(name), note);
}

Report frt_report(int n, int cutoff) {
  if (cutoff < 2) throw ConfigurationError("frt check needs cutoff >= 2");
  LoopAlgebra alg(n);
  GeneratorMatrix tp = build_T(alg, 1, cutoff);
  GeneratorMatrix tm = build_T(alg, -1, cutoff);
  Report rep;
  rep.command = "verify frt";
  rep.params = {{"n", std::to_string(n)}, {"cutoff", std::to_string(cutoff)}};
  for (const GeneratorMatrix* t : {&tp, &tm}) {
    std::string tag = t->sign > 0 ? "+" : "-";
    std::optional<Locator> bad;
    for (const auto& [key, series] : t->entries.entries()) {
      for (const auto& [e, c] : series.terms()) {
        Element r = alg.bracket(c, alg.central());
        if (!r.is_zero() && !bad) bad = Locator{entry_locator(n, 1, key.first, key.second), monomial_locator(vars(), e), render(r)};
      }
    }
    rep.add(bad ? Check::fail("[T" + tag + "(x), c] = 0", *bad) : Check::pass("[T" + tag + "(x), c] = 0"));
    LoopSeries trace = t->entries.trace();
    if (trace.is_zero()) {
      rep.add(Check::pass("tr T" + tag + "(x) = 0"));
    } else {
      const auto& [e, c] = *trace.terms().begin();
      rep.add(Check::fail("tr T" + tag + "(x) = 0", Locator{"trace", monomial_locator(vars(), e), render(c)}));
    }
  }
  auto [pp, clear_pp] = frt_residual(alg, tp.entries, tp.entries, false);
  rep.add(window_check("[T1+(x), T2+(y)] relation", pp, clear_pp, cutoff));
  auto [mm, clear_mm] = frt_residual(alg, tm.entries, tm.entries, false);
  rep.add(window_check("[T1-(x), T2-(y)] relation", mm, clear_mm, cutoff));
  auto [pm, clear_pm] = frt_residual(alg, tp.entries, tm.entries, true);
  rep.add(window_check("[T1+(x), T2-(y)] relation with central term", pm, clear_pm, cutoff));
  return rep;
}

Check frt_without_central(int n, int cutoff) {
  LoopAlgebra alg(n);
  auto [pm, clear] = frt_residual(alg, build_T(alg, 1, cutoff).entries, build_T(alg, -1, cutoff).entries, false);
  return window_check("[T1+(x), T2-(y)] relation without central term", pm, clear, cutoff);
}

Check theta1_matrix_form(int n, int cutoff, int sign_offset) {
  LoopAlgebra alg(n);
  LoopAutomorphism th = theta1(alg, sign_offset);
  const int s = sign_power(n);
  ScalarOperator u = u_conj_matrix(n);
  std::vector<Check> parts;
  for (int sign : {1, -1}) {
    LoopMatrix t = build_T(alg, sign, cutoff).entries;
    LoopMatrix other = build_T(alg, -sign, cutoff).entries;
    LoopMatrix moved = other.map<LoopSeries>([s](const LoopSeries& p) { return p.substitute(0, s, {-1, 0, 0}); });
    LoopMatrix rhs = scalar_right(scalar_left(u, moved.transposed()), u);
    LoopMatrix diff = apply_entrywise(t, th) - rhs;
    auto in_window = [cutoff](const SpectralExponents& e) { return std::abs(e[0]) <= cutoff; };
    std::string name = std::string("theta1 matrix form on T") + (sign > 0 ? "+" : "-");
    if (auto loc = first_difference<Element>(diff, in_window, render)) {
      parts.push_back(Check::fail(name, *loc));
    } else {
      parts.push_back(Check::pass(name));
    }
  }
  if (!(th.apply(alg.central()) == Element(loop::Symbol::central(), ParamPoly(-1)))) {
    parts.push_back(Check::fail("theta1(c) = -c", Locator{"c", {}, render(th.apply(alg.central()))}));
  }
  return combine("theta1 matrix form agrees with generator action", parts,
                 "cutoff " + std::to_string(cutoff));
}

Check theta2_matrix_form(int n, int cutoff, int epsilon) {
  LoopAlgebra alg(n);
  LoopAutomorphism th = theta2(alg, epsilon);
  const int half = n / 2;
  // V and V^{-1} on the doubled lattice: exponent k of x is stored as 2k.
  ScalarOperator v(n, 1);
  ScalarOperator v_inv(n, 1);
  auto sqrt_power = [](int k, int c) { return spectral_monomial(vars(), {k, 0, 0}, ParamPoly(c)); };
  for (int j = 1; j <= half; ++j) {
    const auto lo = static_cast<std::uint32_t>(j - 1);
    const auto hi = static_cast<std::uint32_t>(half + j - 1);
    v.add(lo, hi, sqrt_power(-1, 1));
    v.add(hi, lo, sqrt_power(1, epsilon));
    v_inv.add(hi, lo, sqrt_power(1, 1));
    v_inv.add(lo, hi, sqrt_power(-1, epsilon));
  }
  auto times = [](const SpectralLaurent& a, const SpectralLaurent& b) { return a * b; };
  ScalarOperator v_check = multiply<SpectralLaurent>(v, v_inv, times);
  std::vector<Check> parts;
  if (!(v_check == identity_operator(n, 1, spectral_constant(ParamPoly(1))))) {
    parts.push_back(Check::fail("V V^{-1} = 1", Locator{"V", {}, "V V^{-1} differs from identity"}));
  }
  // x d/dx = (s/2) d/ds with s = sqrt(x)
  ScalarOperator v_euler =
      v.map<SpectralLaurent>([](const SpectralLaurent& p) { return p.euler_derivative(0).scaled(ParamPoly(rational(1, 2))); });
  ScalarOperator log_derivative = multiply<SpectralLaurent>(v_euler, v_inv, times).map<SpectralLaurent>(
      [](const SpectralLaurent& p) { return p.halve_exponents(0); });
  for (int sign : {1, -1}) {
    LoopMatrix t = build_T(alg, sign, cutoff).entries;
    LoopMatrix other = build_T(alg, -sign, cutoff).entries;
    LoopMatrix moved = other.map<LoopSeries>(
        [](const LoopSeries& p) { return p.substitute(0, 1, {-1, 0, 0}).scale_exponents(0, 2); });
    LoopMatrix conj = scalar_right(scalar_left(v, moved.transposed()), v_inv)
                          .map<LoopSeries>([](const LoopSeries& p) { return p.halve_exponents(0); });
    LoopMatrix rhs = conj - scale(central_matrix(log_derivative), spectral_constant(ParamPoly(sign)));
    LoopMatrix diff = apply_entrywise(t, th) - rhs;
    const int bound = cutoff - 1;
    auto in_window = [bound](const SpectralExponents& e) { return std::abs(e[0]) <= bound; };
    std::string name = std::string("theta2 matrix form on T") + (sign > 0 ? "+" : "-");
    if (auto loc = first_difference<Element>(diff, in_window, render)) {
      parts.push_back(Check::fail(name, *loc));
    } else {
      parts.push_back(Check::pass(name));
    }
  }
  return combine("theta2 matrix form agrees with generator action", parts,
                 "cutoff " + std::to_string(cutoff) + ", epsilon " + std::to_string(epsilon));
}

Report automorphism_report(const std::string& which, int n, int max_level, int epsilon, int matrix_cutoff) {
  LoopAlgebra alg(n);
  Report rep;
  rep.command = "verify automorphism";
  rep.params = {{"which", which}, {"n", std::to_string(n)}, {"levels", std::to_string(max_level)}};
  if (which == "theta1") {
    LoopAutomorphism th = theta1(alg);
    rep.add(check_involution(alg, th, max_level));
    rep.add(check_morphism(alg, th, max_level));
    rep.add(theta1_matrix_form(n, matrix_cutoff));
  } else if (which == "theta2") {
    rep.params.emplace_back("epsilon", std::to_string(epsilon));
    LoopAutomorphism th = theta2(alg, epsilon);
    rep.add(check_involution(alg, th, max_level));
    rep.add(check_morphism(alg, th, max_level));
    rep.add(theta2_matrix_form(n, matrix_cutoff, epsilon));
  } else {
    throw ConfigurationError("unknown automorphism '" + which + "' (expected theta1 or theta2)");
  }
  return rep;
}

}  // namespace slnaw::frt
