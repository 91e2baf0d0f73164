#pragma once

#include "slnaw/core/report.hpp"
#include "slnaw/rmatrix/tensor_operator.hpp"

namespace slnaw::rmatrix {

/// Spectral alphabets: {x, y} for two-point objects, {x1, x2, x3} for the
/// three-leg equations.
const Alphabet* two_point_vars();
const Alphabet* three_point_vars();

/// (-1)^N.
inline int parity_sign(int n) { return sign_power(n); }

/// r(x/y) as a two-leg operator in (x, y).
TensorOperator build_r(int n);

/// U = sum_j (-1)^j E_jj.
ScalarOperator u_matrix(int n);

/// r(x/y) + U_1 r^{t_1}((-1)^N/(xy)) U_1^{-1}, computed from build_r.
TensorOperator build_rbar_folded(int n);
/// The explicit closed form of the folded r-matrix.
TensorOperator build_rbar_closed(int n);

/// r_12(x/y) + r_21(y/x) = 0.
Check check_skew(const TensorOperator& r);
/// [r_13, r_23] = [r_13 + r_23, r_12] with arguments x_a/x_b.
Check check_cybe(const TensorOperator& r);
/// [rb_13, rb_23] = [rb_21, rb_13] + [rb_23, rb_12] with arguments (x_a, x_b).
Check check_ns_cybe(const TensorOperator& rbar);
/// Folded construction equals the closed form entrywise.
Check check_folding(int n);
/// U_1 U_2 r_12 = r_12 U_1 U_2.
Check check_u_symmetry(int n);

Report skew_report(int n);
Report cybe_report(int n);
Report ns_cybe_report(int n);

}  // namespace slnaw::rmatrix
