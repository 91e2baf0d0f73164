#pragma once

#include "slnaw/aw/struct_table.hpp"
#include "slnaw/core/lie_matrix.hpp"

namespace slnaw::aw {

/// Corruptions of the rank-2 table used by negative controls.
struct Aw3Variant {
  bool drop_alpha_in_ff = false;  // [f_i, f_j] loses its alpha e_k term
  bool flip_e_in_fg = false;      // [f_i, g_j] gets +2 e_i instead of -2 e_i
};

/// Basis e1..e3, f1..f3, g1, g2 with g3 = -g1 - g2.
StructTable aw3_table(Aw3Variant variant = {});
/// Basis e1..e4, f1..f4, g1..g4, h1..h3 with h4 = -h1 - h2 - h3.
StructTable aw4_table();

/// B(x) = prefactor / denominator(x) * numerator(x); numerator entries are
/// Laurent polynomials in x (over the {x, y} alphabet) with coefficients in
/// some element space E.
template <class E>
struct AWMatrixOf {
  int n = 0;
  Rational prefactor{2};
  SpectralLaurent denominator;
  LieMatrix<E> numerator;
};
using AWMatrix = AWMatrixOf<AWElement>;

/// alpha + (-1)^{N+1} x - 1/x in variable `var` (0 = x, 1 = y).
SpectralLaurent aw_denominator(int n, std::size_t var);

/// The explicit B(x) of the N = 3 and N = 4 quotients over `t`.
AWMatrix build_B_aw(int n, const StructTable& t);

/// Reflection residual cleared by (x-y)(xy-(-1)^N) x y d(x) d(y); `bracket`
/// maps two coefficients to the result space (which may differ from E only
/// by key range, as in the extraction solver).
template <class E, class Bracket>
LieMatrix<E> aw_reflection_residual(const AWMatrixOf<E>& b, Bracket&& bracket);

/// Exact reflection relation and tr B = 0; no truncation.
std::vector<Check> check_reflection_aw(const StructTable& t, const AWMatrix& b);

/// Defining words f_i, g_j, three-generator relations, the alpha-twisted
/// relation and its equivalent four-fold form.
Check check_three_generator_presentation(const StructTable& t);
/// Four-generator relations for i = 1..4 (indices mod 4).
Check check_four_generator_presentation(const StructTable& t);
/// Rank of all brackets of e1, e2, e3 up to depth 3 equals the dimension.
Check check_generation_rank(const StructTable& t, int depth = 3);

Report aw_report(int n);

}  // namespace slnaw::aw

#include "slnaw/aw/tables_impl.hpp"
