#pragma once

#include "slnaw/core/lie_matrix.hpp"
#include "slnaw/frt/automorphisms.hpp"
#include "slnaw/rmatrix/tensor_operator.hpp"

namespace slnaw::frt {

using LoopSeries = Laurent<loop::Element>;
using LoopMatrix = LieMatrix<loop::Element>;

/// T^+(x) (sign +1) or T^-(x) (sign -1) truncated at |exponent| <= cutoff,
/// a one-leg matrix over the spectral alphabet {x, y} using x.
struct GeneratorMatrix {
  int n = 0;
  int sign = 1;
  int cutoff = 0;
  LoopMatrix entries;
};

GeneratorMatrix build_T(const loop::LoopAlgebra& alg, int sign, int cutoff);

/// Applies a Lie-algebra map to every series coefficient.
LoopMatrix apply_entrywise(const LoopMatrix& m, const LoopAutomorphism& theta);

/// Moves a one-leg matrix in x to the variable y.
LoopMatrix in_y(const LoopMatrix& m);

/// Residual of [T_1(x), T_2(y)] = [T_1(x) + T_2(y), r_12(x/y)] (minus the
/// central term 2c r'(x/y) x/y when `central` is set) after multiplying by
/// the minimal clearing polynomial. Returns the residual and that polynomial.
std::pair<LoopMatrix, SpectralLaurent> frt_residual(const loop::LoopAlgebra& alg, const LoopMatrix& t1,
                                                    const LoopMatrix& t2, bool central);

/// Compares a residual in the window |a| <= cutoff - deg_x(clear),
/// |b| <= cutoff - deg_y(clear); throws ConfigurationError if that is empty.
Check window_check(std::string name, const LoopMatrix& residual, const SpectralLaurent& clearing, int cutoff);

/// Commutation with c, tr_1 T = 0, the (++), (--) and (+-) relations.
Report frt_report(int n, int cutoff);
/// (+-) relation with the central term omitted (negative control).
Check frt_without_central(int n, int cutoff);

/// Matrix forms: T^± -> U T^∓((-1)^N/x)^t U  and
/// T^± -> V(x) T^∓(1/x)^t V(x)^{-1} ∓ c x V'(x) V(x)^{-1}, compared with the
/// entrywise generator action.
Check theta1_matrix_form(int n, int cutoff, int sign_offset = 1);
Check theta2_matrix_form(int n, int cutoff, int epsilon);

Report automorphism_report(const std::string& which, int n, int max_level, int epsilon, int matrix_cutoff);

}  // namespace slnaw::frt
