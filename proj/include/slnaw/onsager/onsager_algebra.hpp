#pragma once

#include <compare>
#include <string>
#include <vector>

#include "slnaw/core/lincomb.hpp"
#include "slnaw/core/report.hpp"
#include "slnaw/loop/loop_algebra.hpp"

namespace slnaw::onsager {

/// Canonical generator B_ij^(n): level >= 1 with (i,j) != (N,N), or level 0
/// with i < j. Indices are 1-based.
struct Symbol {
  int level = 0;
  int i = 0;
  int j = 0;

  auto operator<=>(const Symbol&) const = default;
  std::string name() const;
};

using Element = LinComb<Symbol>;

std::string to_string(const Element& e);

class OnsagerAlgebra {
 public:
  /// `relation_sign_offset` replaces the +1 in (-1)^{i+j+1+mN} of the
  /// abstract bracket; only negative controls change it.
  explicit OnsagerAlgebra(int n, int relation_sign_offset = 1);

  int n() const { return n_; }
  const loop::LoopAlgebra& loop_algebra() const { return loop_; }

  /// Reduces any B_ij^(n), n in Z, to canonical symbols.
  Element canonical(int i, int j, int level) const;
  /// A_ij^(n) (i != j) and G_i^(n) = B_ii^(n) - B_{i+1,i+1}^(n).
  Element a(int i, int j, int level) const;
  Element g(int i, int level) const;

  Element basis_bracket(const Symbol& x, const Symbol& y) const;
  Element bracket(const Element& x, const Element& y) const;

  /// B_ij^(n) -> e_ij^(n) + (-1)^{i+j+1+nN} e_ji^(-n) in the affine algebra.
  loop::Element embed(const Symbol& s) const;
  loop::Element embed(const Element& e) const;

  /// Canonical symbols with level <= max_level.
  std::vector<Symbol> basis(int max_level) const;

 private:
  Element bracket_raw(int i, int j, int m, int k, int l, int n) const;
  int n_;
  int sign_offset_;
  loop::LoopAlgebra loop_;
};

/// embed(bracket_abstract(a,b)) = [embed a, embed b] on all canonical pairs.
Check check_presentation_agreement(const OnsagerAlgebra& alg, int max_level);
Check check_antisymmetry(const OnsagerAlgebra& alg, int max_level);
/// canonical() is idempotent and canonical symbols embed to theta1 fixed points.
Check check_canonical_forms(const OnsagerAlgebra& alg, int max_level);
/// The A/G relations for |levels| <= L (m >= n in the A-A relation). With
/// `oriented_sum` the G-sum for i > j is -sum_{s=j}^{i-1}; otherwise it is empty.
std::vector<Check> check_ui_relations(const OnsagerAlgebra& alg, int max_level, bool oriented_sum = true);
/// N-generator presentation with e_i = A_{i,i+1}^(0), e_N = A_{1N}^(-1).
Check check_generator_presentation(const OnsagerAlgebra& alg);

Report onsager_report(int n, int max_level);

}  // namespace slnaw::onsager
