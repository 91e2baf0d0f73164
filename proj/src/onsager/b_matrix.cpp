#include "slnaw/onsager/b_matrix.hpp"

#include <cstdlib>

#include "slnaw/frt/generators.hpp"
#include "slnaw/rmatrix/r_matrix.hpp"

namespace slnaw::onsager {

using rmatrix::ScalarOperator;
using rmatrix::TensorOperator;

namespace {

const Alphabet* vars() { return rmatrix::two_point_vars(); }

std::string render(const Element& e) { return to_string(e); }

OnsagerSeries mono(std::size_t var, int exponent, const Element& e) {
  SpectralExponents exps{0, 0, 0};
  exps[var] = exponent;
  return OnsagerSeries::monomial(vars(), exps, e);
}

frt::LoopMatrix embed_matrix(const OnsagerAlgebra& alg, const OnsagerMatrix& m) {
  return m.map<frt::LoopSeries>([&](const OnsagerSeries& s) {
    frt::LoopSeries out(s.vars());
    for (const auto& [e, c] : s.terms()) out.add_term(e, alg.embed(c));
    return out;
  });
}

Check loop_diff_check(std::string name, const frt::LoopMatrix& diff) {
  auto all = [](const SpectralExponents&) { return true; };
  if (auto loc = first_difference<loop::Element>(diff, all, [](const loop::Element& e) { return loop::to_string(e); })) {
    return Check::fail(std::move(name), *loc);
  }
  return Check::pass(std::move(name));
}

/// Scales a kernel numerator by a cofactor.
ScalarOperator cleared(const TensorOperator& k, const SpectralLaurent& cofactor) {
  return k.numerator().map<SpectralLaurent>([&](const SpectralLaurent& p) { return cofactor * p; });
}

}  // namespace

OnsagerMatrix build_B_matrix(const OnsagerAlgebra& alg, int cutoff) {
  if (cutoff < 1) throw ConfigurationError("cutoff must be >= 1");
  const int n = alg.n();
  OnsagerMatrix b(n, 1);
  const ParamPoly two(2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto row = static_cast<std::uint32_t>(i - 1);
      const auto col = static_cast<std::uint32_t>(j - 1);
      if (i < j) b.add(row, col, mono(0, 0, two * alg.canonical(j, i, 0)));
      for (int level = 1; level <= cutoff; ++level) {
        b.add(row, col, mono(0, level, two * alg.canonical(j, i, level)));
      }
    }
  }
  return b;
}

Check check_Bxg(int n, int cutoff) {
  OnsagerAlgebra alg(n);
  const loop::LoopAlgebra& la = alg.loop_algebra();
  frt::LoopMatrix embedded = embed_matrix(alg, build_B_matrix(alg, cutoff));
  frt::LoopMatrix tp = frt::build_T(la, 1, cutoff).entries;
  frt::LoopMatrix tm = frt::build_T(la, -1, cutoff).entries;
  frt::LoopAutomorphism th = frt::theta1(la);
  std::vector<Check> parts;
  parts.push_back(loop_diff_check("B = T+ + theta1(T+) entrywise", embedded - (tp + frt::apply_entrywise(tp, th))));
  const int s = sign_power(n);
  ScalarOperator u = rmatrix::u_matrix(n);
  frt::LoopMatrix moved = tm.map<frt::LoopSeries>([s](const frt::LoopSeries& p) { return p.substitute(0, s, {-1, 0, 0}); });
  // U is an involution, so U^{-1} = U
  frt::LoopMatrix folded = scalar_right(scalar_left(u, moved.transposed()), u);
  parts.push_back(loop_diff_check("B = T+ + U T-((-1)^N/x)^t U^{-1}", embedded - (tp + folded)));
  return combine("B(x) agrees with the folded FRT generators", parts, "cutoff " + std::to_string(cutoff));
}

Check check_B_trace(const OnsagerAlgebra&, const OnsagerMatrix& b) {
  OnsagerSeries tr = b.trace();
  if (tr.is_zero()) return Check::pass("tr B(x) = 0");
  const auto& [e, c] = *tr.terms().begin();
  return Check::fail("tr B(x) = 0", Locator{"trace", monomial_locator(vars(), e), render(c)});
}

OnsagerMatrix reflection_residual(const OnsagerAlgebra& alg, const OnsagerMatrix& b, const TensorOperator& kernel,
                                  SpectralLaurent& clearing) {
  TensorOperator k21 = kernel.rename_into(vars(), {1, 0}).embed_legs({2, 1}, 2);
  SpectralLaurent c12;
  SpectralLaurent c21;
  rmatrix::Denominator master = rmatrix::Denominator::lcm(kernel.denominator(), k21.denominator(), c12, c21);
  clearing = master.expand();
  OnsagerMatrix by = b.map<OnsagerSeries>([](const OnsagerSeries& s) { return s.rename_into(vars(), {1, 0}); });
  auto bracket = [&alg](const Element& p, const Element& q) { return alg.bracket(p, q); };
  OnsagerMatrix lhs = scale(leg_bracket(b, by, bracket), clearing);
  OnsagerMatrix b1 = b.embed_legs({1}, 2);
  OnsagerMatrix b2 = by.embed_legs({2}, 2);
  // [k21, B1] = -(B1 k21 - k21 B1)
  return lhs + scalar_commutator(b1, cleared(k21, c21)) - scalar_commutator(b2, cleared(kernel, c12));
}

Check onsager_window_check(std::string name, const OnsagerMatrix& residual, const SpectralLaurent& clearing,
                           int cutoff) {
  const int bx = cutoff - clearing.max_degree(0);
  const int by = cutoff - clearing.max_degree(1);
  if (bx < 0 || by < 0) {
    throw ConfigurationError("empty truncation window: cutoff " + std::to_string(cutoff) +
                             " is below the clearing degree");
  }
  auto in_window = [bx, by](const SpectralExponents& e) { return std::abs(e[0]) <= bx && std::abs(e[1]) <= by; };
  std::string note = "window x^a y^b with a <= " + std::to_string(bx) + ", b <= " + std::to_string(by);
  if (auto loc = first_difference<Element>(residual, in_window, render)) return Check::fail(std::move(name), *loc, note);
  return Check::pass(std::move(name), note);
}

Check check_reflection(int n, int cutoff, bool folded) {
  if (cutoff < 3) throw ConfigurationError("reflection check needs cutoff >= 3");
  OnsagerAlgebra alg(n);
  OnsagerMatrix b = build_B_matrix(alg, cutoff);
  TensorOperator kernel = folded ? rmatrix::build_rbar_closed(n) : rmatrix::build_r(n);
  SpectralLaurent clearing;
  OnsagerMatrix residual = reflection_residual(alg, b, kernel, clearing);
  return onsager_window_check(folded ? "reflection relation" : "reflection relation with unfolded r", residual,
                              clearing, cutoff);
}

OnsagerSeries build_current(const OnsagerAlgebra& alg, int i, int j, int cutoff, std::size_t var) {
  OnsagerSeries out(vars());
  for (int level = i > j ? 0 : 1; level <= cutoff; ++level) {
    out += mono(var, level, ParamPoly(2) * alg.canonical(i, j, level));
  }
  return out;
}

namespace {

Rational step(int k) {
  if (k > 0) return Rational(1);
  if (k == 0) return rational(1, 2);
  return Rational(0);
}

SpectralLaurent poly(std::initializer_list<std::pair<SpectralExponents, Rational>> terms) {
  SpectralLaurent p(vars());
  for (const auto& [e, c] : terms) p.add_term(e, ParamPoly(c));
  return p;
}

}  // namespace

Check check_currents(int n, int cutoff) {
  if (cutoff < 3) throw ConfigurationError("current check needs cutoff >= 3");
  OnsagerAlgebra alg(n);
  const long s = sign_power(n);
  const SpectralExponents one{0, 0, 0}, x{1, 0, 0}, y{0, 1, 0}, xy{1, 1, 0};
  SpectralLaurent clearing = poly({{x, 1}, {y, -1}}) * poly({{xy, 1}, {one, Rational(-s)}});
  // 2/(x-y) and 2/(xy-s) after clearing
  SpectralLaurent kx = poly({{xy, 2}, {one, Rational(-2 * s)}});
  SpectralLaurent ks = poly({{x, 2}, {y, -2}});
  std::vector<Check> parts;
  auto bracket = [&alg](const Element& p, const Element& q) { return alg.bracket(p, q); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          OnsagerSeries lhs = clearing * bilinear(build_current(alg, i, j, cutoff, 0),
                                                  build_current(alg, k, l, cutoff, 1), bracket);
          OnsagerSeries rhs(vars());
          SpectralLaurent wx = kx * poly({{x, step(k - l)}, {y, step(l - k)}});
          SpectralLaurent wy = kx * poly({{y, step(i - j)}, {x, step(j - i)}});
          const long skl = sign_power(k + l);
          const long sij = sign_power(i + j);
          SpectralLaurent vx = ks * poly({{xy, skl * step(l - k)}, {one, skl * s * step(k - l)}});
          SpectralLaurent vy = ks * poly({{xy, sij * step(j - i)}, {one, sij * s * step(i - j)}});
          if (j == k) {
            rhs += wx * build_current(alg, i, l, cutoff, 0);
            rhs -= wy * build_current(alg, i, l, cutoff, 1);
          }
          if (i == l) {
            rhs -= wx * build_current(alg, k, j, cutoff, 0);
            rhs += wy * build_current(alg, k, j, cutoff, 1);
          }
          if (i == k) {
            rhs -= vx * build_current(alg, l, j, cutoff, 0);
            rhs += vy * build_current(alg, j, l, cutoff, 1);
          }
          if (j == l) {
            rhs += vx * build_current(alg, i, k, cutoff, 0);
            rhs -= vy * build_current(alg, k, i, cutoff, 1);
          }
          OnsagerMatrix diff(1, 1);
          diff.add(0, 0, lhs - rhs);
          std::string name = "[B_" + std::to_string(i) + std::to_string(j) + "(x), B_" + std::to_string(k) +
                             std::to_string(l) + "(y)]";
          Check c = onsager_window_check(name, diff, clearing, cutoff);
          if (!c.passed()) {
            c.locator->entry = name;
            return Check::fail("current relations", *c.locator, c.note);
          }
        }
      }
    }
  }
  return Check::pass("current relations", std::to_string(n * n * n * n) + " ordered current pairs, window a, b <= " +
                                              std::to_string(cutoff - clearing.max_degree(0)));
}

Report reflection_report(int n, int cutoff) {
  OnsagerAlgebra alg(n);
  Report rep;
  rep.command = "verify reflection";
  rep.params = {{"n", std::to_string(n)}, {"cutoff", std::to_string(cutoff)}};
  rep.add(check_Bxg(n, cutoff));
  rep.add(check_B_trace(alg, build_B_matrix(alg, cutoff)));
  rep.add(check_reflection(n, cutoff, true));
  return rep;
}

Report currents_report(int n, int cutoff) {
  Report rep;
  rep.command = "verify currents";
  rep.params = {{"n", std::to_string(n)}, {"cutoff", std::to_string(cutoff)}};
  rep.add(check_currents(n, cutoff));
  return rep;
}

}  // namespace slnaw::onsager
