#pragma once

#include "slnaw/rmatrix/r_matrix.hpp"

namespace slnaw::aw {

template <class E, class Bracket>
LieMatrix<E> aw_reflection_residual(const AWMatrixOf<E>& b, Bracket&& bracket) {
  using Series = Laurent<E>;
  const Alphabet* xy = rmatrix::two_point_vars();
  rmatrix::TensorOperator k12 = rmatrix::build_rbar_closed(b.n);
  rmatrix::TensorOperator k21 = k12.rename_into(xy, {1, 0}).embed_legs({2, 1}, 2);
  SpectralLaurent c12;
  SpectralLaurent c21;
  SpectralLaurent master = rmatrix::Denominator::lcm(k12.denominator(), k21.denominator(), c12, c21).expand();
  auto cleared = [](const rmatrix::TensorOperator& k, const SpectralLaurent& c) {
    return k.numerator().template map<SpectralLaurent>([&](const SpectralLaurent& p) { return c * p; });
  };
  const SpectralLaurent dx = b.denominator;
  const SpectralLaurent dy = dx.rename_into(xy, {1, 0});
  const SpectralLaurent xy_mono = spectral_monomial(xy, {1, 1, 0}, ParamPoly(1));
  const ParamPoly p(b.prefactor);
  LieMatrix<E> bx = b.numerator;
  LieMatrix<E> by = bx.template map<Series>([xy](const Series& s) { return s.rename_into(xy, {1, 0}); });
  LieMatrix<E> lhs = scale(leg_bracket(bx, by, bracket), (master * xy_mono).scaled(p * p));
  LieMatrix<E> b1 = bx.embed_legs({1}, 2);
  LieMatrix<E> b2 = by.embed_legs({2}, 2);
  // [k21, b1] = -(b1 k21 - k21 b1)
  LieMatrix<E> t1 = scale(scalar_commutator(b1, cleared(k21, c21)), (dy * xy_mono).scaled(p));
  LieMatrix<E> t2 = scale(scalar_commutator(b2, cleared(k12, c12)), (dx * xy_mono).scaled(p));
  return lhs + t1 - t2;
}

}  // namespace slnaw::aw
