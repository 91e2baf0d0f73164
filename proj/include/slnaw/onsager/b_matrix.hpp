#pragma once

#include "slnaw/core/lie_matrix.hpp"
#include "slnaw/onsager/onsager_algebra.hpp"
#include "slnaw/rmatrix/tensor_operator.hpp"

namespace slnaw::onsager {

using OnsagerSeries = Laurent<Element>;
using OnsagerMatrix = LieMatrix<Element>;

/// B(x) truncated at x^cutoff, one leg over the {x, y} alphabet in x.
OnsagerMatrix build_B_matrix(const OnsagerAlgebra& alg, int cutoff);

/// embed(B(x)) against T+ + theta1(T+) entrywise and against the matrix form
/// T+ + U T-((-1)^N/x)^t U^{-1}.
Check check_Bxg(int n, int cutoff);
Check check_B_trace(const OnsagerAlgebra& alg, const OnsagerMatrix& b);

/// Residual of the reflection relation for `b` with the given two-leg
/// scalar kernel (the folded r-matrix, or anything else for controls),
/// cleared by the lcm of both kernel denominators. Returns the clearing
/// polynomial in `clearing`.
OnsagerMatrix reflection_residual(const OnsagerAlgebra& alg, const OnsagerMatrix& b,
                                  const rmatrix::TensorOperator& kernel, SpectralLaurent& clearing);

/// Window comparison: exponents a <= cutoff - deg_x(clear), b <= cutoff - deg_y(clear),
/// also bounded below by -(same) for Laurent inputs.
Check onsager_window_check(std::string name, const OnsagerMatrix& residual, const SpectralLaurent& clearing,
                           int cutoff);

Check check_reflection(int n, int cutoff, bool folded = true);

/// 2 sum_{n >= start} x^n B_ij^(n) with start 0 when i > j, else 1; in
/// variable `var` (0 = x, 1 = y).
OnsagerSeries build_current(const OnsagerAlgebra& alg, int i, int j, int cutoff, std::size_t var);

/// One residual per ordered index quadruple; first failure wins.
Check check_currents(int n, int cutoff);

Report reflection_report(int n, int cutoff);
Report currents_report(int n, int cutoff);

}  // namespace slnaw::onsager
