#include "slnaw/rmatrix/r_matrix.hpp"

namespace slnaw::rmatrix {

namespace {

SpectralLaurent var(const Alphabet* a, std::size_t i) {
  SpectralExponents e{};
  e[i] = 1;
  return spectral_monomial(a, e);
}

SpectralLaurent constant(long c) { return spectral_constant(ParamPoly(c)); }

void require_n(int n) {
  if (n < 2) throw ConfigurationError("r-matrix needs N >= 2");
}

/// sum_i E_ii (x) E_ii - (1/N) I (x) I
ScalarOperator diagonal_projector(int n) {
  ScalarOperator p(n, 2);
  for (int i = 1; i <= n; ++i) {
    p += kron(matrix_unit(n, i, i), matrix_unit(n, i, i));
    for (int k = 1; k <= n; ++k) {
      p -= kron(matrix_unit(n, i, i), matrix_unit(n, k, k, ParamPoly(rational(1, n))));
    }
  }
  return p;
}

/// sum over ordered pairs (i, j) selected by `keep` of weight(i,j) E_ij (x) E_ji
template <class Keep>
ScalarOperator exchange(int n, Keep keep) {
  ScalarOperator p(n, 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (keep(i, j)) p += kron(matrix_unit(n, i, j), matrix_unit(n, j, i));
    }
  }
  return p;
}

/// sum over pairs with i<j (or i>j) of (-1)^{i+j} E_ji (x) E_ji
template <class Keep>
ScalarOperator twisted(int n, Keep keep) {
  ScalarOperator p(n, 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (keep(i, j)) p += kron(matrix_unit(n, j, i, ParamPoly(sign_power(i + j))), matrix_unit(n, j, i));
    }
  }
  return p;
}

TensorOperator on_legs(const TensorOperator& two_point, std::size_t first, std::size_t second, int leg_a, int leg_b) {
  return two_point.rename_into(three_point_vars(), {first, second}).embed_legs({leg_a, leg_b}, 3);
}

}  // namespace

const Alphabet* two_point_vars() { return Alphabet::of({"x", "y"}); }
const Alphabet* three_point_vars() { return Alphabet::of({"x1", "x2", "x3"}); }

TensorOperator build_r(int n) {
  require_n(n);
  const Alphabet* a = two_point_vars();
  SpectralLaurent x = var(a, 0);
  SpectralLaurent y = var(a, 1);
  SpectralLaurent den = y - x;
  TensorOperator r = TensorOperator::scalar_times(diagonal_projector(n), y + x, {den});
  r += TensorOperator::scalar_times(exchange(n, [](int i, int j) { return i < j; }), y.scaled(ParamPoly(2)), {den});
  r += TensorOperator::scalar_times(exchange(n, [](int i, int j) { return i > j; }), x.scaled(ParamPoly(2)), {den});
  return r;
}

ScalarOperator u_matrix(int n) {
  ScalarOperator u(n, 1);
  for (int j = 1; j <= n; ++j) u += matrix_unit(n, j, j, ParamPoly(sign_power(j)));
  return u;
}

TensorOperator build_rbar_folded(int n) {
  const int s = parity_sign(n);
  // r(z) in the single variable x, then z -> (-1)^N / (x y).
  TensorOperator single = build_r(n).specialize(1, 1);
  TensorOperator folded = single.transpose_leg(1).substitute(0, s, {-1, -1, 0});
  ScalarOperator u1 = kron(u_matrix(n), identity_operator(n, 1, constant(1)));
  TensorOperator conj = TensorOperator(u1) * folded * TensorOperator(u1);  // U^{-1} = U
  return build_r(n) + conj;
}

TensorOperator build_rbar_closed(int n) {
  require_n(n);
  const int s = parity_sign(n);
  const Alphabet* a = two_point_vars();
  SpectralLaurent x = var(a, 0);
  SpectralLaurent y = var(a, 1);
  SpectralLaurent x_minus_y = x - y;
  SpectralLaurent xy_minus_s = x * y - constant(s);
  SpectralLaurent s_minus_xy = constant(s) - x * y;
  ScalarOperator proj = diagonal_projector(n);
  TensorOperator r = -TensorOperator::scalar_times(proj, x + y, {x_minus_y});
  r -= TensorOperator::scalar_times(proj, x * y + constant(s), {s_minus_xy});
  r -= TensorOperator::scalar_times(exchange(n, [](int i, int j) { return i < j; }), y.scaled(ParamPoly(2)), {x_minus_y});
  r -= TensorOperator::scalar_times(exchange(n, [](int i, int j) { return i > j; }), x.scaled(ParamPoly(2)), {x_minus_y});
  r += TensorOperator::scalar_times(twisted(n, [](int i, int j) { return i < j; }), (x * y).scaled(ParamPoly(2)),
                                    {xy_minus_s});
  r += TensorOperator::scalar_times(twisted(n, [](int i, int j) { return i > j; }), constant(2 * s), {xy_minus_s});
  return r;
}

Check check_skew(const TensorOperator& r) {
  TensorOperator swapped = r.rename_into(two_point_vars(), {1, 0}).embed_legs({2, 1}, 2);
  return zero_check("skew-symmetry", r + swapped);
}

Check check_cybe(const TensorOperator& r) {
  TensorOperator r13 = on_legs(r, 0, 2, 1, 3);
  TensorOperator r23 = on_legs(r, 1, 2, 2, 3);
  TensorOperator r12 = on_legs(r, 0, 1, 1, 2);
  TensorOperator residual = commutator(r13, r23) - commutator(r13 + r23, r12);
  return zero_check("classical Yang-Baxter equation", residual, "denominator " + residual.denominator().to_string());
}

Check check_ns_cybe(const TensorOperator& rbar) {
  TensorOperator r13 = on_legs(rbar, 0, 2, 1, 3);
  TensorOperator r23 = on_legs(rbar, 1, 2, 2, 3);
  TensorOperator r12 = on_legs(rbar, 0, 1, 1, 2);
  TensorOperator r21 = on_legs(rbar, 1, 0, 2, 1);
  TensorOperator residual = commutator(r13, r23) - commutator(r21, r13) - commutator(r23, r12);
  return zero_check("non-standard classical Yang-Baxter equation", residual,
                    "denominator " + residual.denominator().to_string());
}

Check check_folding(int n) {
  return zero_check("folded r-matrix equals closed form", build_rbar_folded(n) - build_rbar_closed(n));
}

Check check_u_symmetry(int n) {
  ScalarOperator u = u_matrix(n);
  TensorOperator uu(kron(u, u));
  TensorOperator r = build_r(n);
  return zero_check("U_1 U_2 commutes with r", uu * r - r * uu);
}

Report skew_report(int n) {
  Report rep;
  rep.command = "verify skew";
  rep.params = {{"n", std::to_string(n)}};
  rep.add(check_skew(build_r(n)));
  return rep;
}

Report cybe_report(int n) {
  Report rep;
  rep.command = "verify cybe";
  rep.params = {{"n", std::to_string(n)}};
  rep.add(check_cybe(build_r(n)));
  return rep;
}

Report ns_cybe_report(int n) {
  Report rep;
  rep.command = "verify ns-cybe";
  rep.params = {{"n", std::to_string(n)}};
  rep.add(check_folding(n));
  rep.add(check_ns_cybe(build_rbar_closed(n)));
  return rep;
}

}  // namespace slnaw::rmatrix
