#pragma once

#include <vector>

#include "slnaw/onsager/b_matrix.hpp"
#include "slnaw/rmatrix/tensor_operator.hpp"

namespace slnaw::charges {

/// Symbolic parameters mu_i, kappa_ij, kappastar_ij (i < j) in one alphabet.
class ChargeParams {
 public:
  explicit ChargeParams(int n);
  int n() const { return n_; }
  const Alphabet* alphabet() const { return alphabet_; }
  std::size_t count() const { return alphabet_->size(); }
  ParamPoly mu(int i) const;
  ParamPoly kappa(int i, int j) const;
  ParamPoly kappa_star(int i, int j) const;

 private:
  int n_;
  const Alphabet* alphabet_;
};

/// Variants of M used by negative controls.
struct MOptions {
  bool drop_lower_sign = false;
};

/// M in variable `var` (0 = x, 1 = y) over the {x, y} alphabet.
rmatrix::ScalarOperator build_M(const ChargeParams& p, std::size_t var, MOptions opt = {});

/// [tr_1(rbar_12(x,y) M_1(x)), M_2(y)] as a one-leg operator.
rmatrix::TensorOperator trace_condition_residual(const ChargeParams& p, MOptions opt = {});
Check check_trace_condition(int n, MOptions opt = {});
/// tr_1(rbar_12 M_1) against its closed form in terms of U_i, W_ij, V_ij.
Check check_trace_closed_form(int n);

/// b(x) = tr M(x) B(x), exact for exponents <= cutoff - 1.
onsager::OnsagerSeries build_b(const onsager::OnsagerAlgebra& alg, const ChargeParams& p, int cutoff);
Check check_b_commute(int n, int cutoff);

struct Charge {
  int order = 0;
  onsager::Element value;
};

/// Coefficients of x^0..x^max_order in b(x).
std::vector<Charge> extract_charges(const onsager::OnsagerAlgebra& alg, const ChargeParams& p, int max_order);

/// Closed-form charge with the sum over i < j; `generic` selects the n > 1
/// formula regardless of the order.
onsager::Element displayed_charge(const onsager::OnsagerAlgebra& alg, const ChargeParams& p, int order, bool generic);

/// Compares each extracted charge with the closed forms and reports the
/// proportionality constant.
std::vector<Check> check_charges_match(int n, int max_order);

/// [I_m, I_n] = 0 for 0 <= m, n <= max_order; `flip_kappa_star_12` negates
/// kappastar_12 in I_1 only.
Check check_charge_commutativity(int n, int max_order, bool flip_kappa_star_12 = false);

/// theta1-invariance of the embedded charges and homogeneity of degree 1 in
/// the parameters.
Check check_charge_structure(int n, int max_order);

Report charges_report(int n, int max_order);

}  // namespace slnaw::charges
