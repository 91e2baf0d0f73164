#include <doctest.h>

#include "slnaw/exactnum/errors.hpp"
#include "slnaw/rmatrix/r_matrix.hpp"

using namespace slnaw;
using namespace slnaw::rmatrix;

namespace {

SpectralLaurent X() { return spectral_variable(two_point_vars(), "x"); }
SpectralLaurent Y() { return spectral_variable(two_point_vars(), "y"); }
SpectralLaurent C(long c) { return spectral_constant(ParamPoly(c)); }

// entry of E_ab (x) E_cd, 1-based
RationalFn coeff(const TensorOperator& op, int a, int b, int c, int d) {
  return op.entry(LegIndex{a - 1, c - 1}, LegIndex{b - 1, d - 1});
}

TensorOperator flip_one_sign(const TensorOperator& r, int a, int b, int c, int d) {
  ScalarOperator num = r.numerator();
  LegIndex row{a - 1, c - 1};
  LegIndex col{b - 1, d - 1};
  SpectralLaurent v = num.at(row, col);
  num.add(row, col, v.scaled(ParamPoly(-2)));
  return TensorOperator(num, r.denominator());
}

}  // namespace

TEST_CASE("r-matrix entries") {
  TensorOperator r2 = build_r(2);
  CHECK(coeff(r2, 1, 2, 2, 1) == RationalFn(Y().scaled(ParamPoly(2)), Y() - X()));
  CHECK(coeff(r2, 1, 1, 1, 1) == RationalFn((Y() + X()).scaled(ParamPoly(rational(1, 2))), Y() - X()));
  for (int n = 2; n <= 4; ++n) {
    CHECK(coeff(build_r(n), 1, 1, 2, 2) == RationalFn((Y() + X()).scaled(ParamPoly(rational(-1, n))), Y() - X()));
  }
  CHECK_THROWS_AS(build_r(1), ConfigurationError);
}

TEST_CASE("single-variable specialization") {
  TensorOperator z = build_r(2).specialize(1, 1);
  CHECK(coeff(z, 1, 2, 2, 1) == RationalFn(C(2), C(1) - X()));
  CHECK(coeff(z, 2, 1, 1, 2) == RationalFn(X().scaled(ParamPoly(2)), C(1) - X()));
}

TEST_CASE("skew symmetry and CYBE") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_skew(build_r(n)).passed());
    CHECK(check_cybe(build_r(n)).passed());
  }
}

TEST_CASE("negative controls locate the corrupted entry") {
  TensorOperator bad = flip_one_sign(build_r(3), 1, 2, 2, 1);
  Check skew = check_skew(bad);
  CHECK_FALSE(skew.passed());
  REQUIRE(skew.locator.has_value());
  CHECK_FALSE(skew.locator->entry.empty());
  CHECK_FALSE(check_cybe(bad).passed());
  // diagonal weight dropped
  const Alphabet* a = two_point_vars();
  (void)a;
  TensorOperator no_diag(ScalarOperator(3, 2));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      ScalarOperator e = kron(matrix_unit(3, i, j), matrix_unit(3, j, i));
      no_diag += TensorOperator::scalar_times(e, (i < j ? Y() : X()).scaled(ParamPoly(2)), {Y() - X()});
    }
  }
  CHECK_FALSE(check_cybe(no_diag).passed());
}

TEST_CASE("leg calculus") {
  ScalarOperator a = matrix_unit(2, 1, 2) + matrix_unit(2, 2, 2, ParamPoly(3));
  ScalarOperator b = matrix_unit(2, 2, 1);
  ScalarOperator ab = kron(a, b);
  CHECK(ab.partial_trace(1) == b.map<SpectralLaurent>([](const SpectralLaurent& v) { return C(3) * v; }));
  CHECK(ab.transpose_leg(2).transpose_leg(2) == ab);
  CHECK(kron(a, b).embed_legs({2, 1}, 2) == kron(b, a));
  CHECK(kron(a, b).embed_legs({1, 2}, 3) == kron(kron(a, b), identity_operator(2, 1, C(1))));
  auto id3 = identity_operator(2, 1, C(1)).embed_legs({2}, 3);
  CHECK(id3 == identity_operator(2, 3, C(1)));
  CHECK(id3.trace() == C(8));
  CHECK_THROWS_AS(ab.embed_legs({1, 1}, 3), ConfigurationError);
  CHECK_THROWS_AS(ab.partial_trace(3), IndexError);
}

TEST_CASE("folded r-matrix") {
  TensorOperator closed = build_rbar_closed(2);
  SpectralLaurent xy = X() * Y();
  CHECK(coeff(closed, 2, 1, 2, 1) == RationalFn(xy.scaled(ParamPoly(-2)), xy - C(1)));
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_folding(n).passed());
    int s = sign_power(n);
    RationalFn w = RationalFn(X() + Y(), X() - Y()) + RationalFn(xy + C(s), C(s) - xy);
    RationalFn expected = -(w * RationalFn::from(spectral_constant(ParamPoly(1 - rational(1, n)))));
    CHECK(coeff(build_rbar_folded(n), 1, 1, 1, 1) == expected);
  }
}

TEST_CASE("non-standard CYBE and its reduction") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(check_ns_cybe(build_rbar_closed(n)).passed());
    CHECK(check_ns_cybe(build_r(n)).passed());
    CHECK(check_u_symmetry(n).passed());
  }
}
