#pragma once

#include <compare>
#include <string>
#include <vector>

#include "slnaw/core/lincomb.hpp"

namespace slnaw::loop {

/// Canonical basis of the affine algebra: the central element, off-diagonal
/// loop generators e_ij^(n) (i != j) and Cartan generators h_i^(n) (i < N).
/// Indices are 1-based.
struct Symbol {
  enum class Kind : int { Central = 0, OffDiag = 1, Cartan = 2 };
  Kind kind = Kind::Central;
  int i = 0;
  int j = 0;
  int level = 0;

  static Symbol central() { return {}; }
  static Symbol off_diag(int i, int j, int level) { return {Kind::OffDiag, i, j, level}; }
  static Symbol cartan(int i, int level) { return {Kind::Cartan, i, 0, level}; }

  auto operator<=>(const Symbol&) const = default;
  std::string name() const;
};

using Element = LinComb<Symbol>;

std::string to_string(const Element& e);

/// Raw generator e_ij^(n) with rational weight, the form in which brackets
/// are computed before canonicalization.
struct RawTerm {
  int i;
  int j;
  int level;
  Rational weight;
};

class LoopAlgebra {
 public:
  explicit LoopAlgebra(int n);

  int n() const { return n_; }

  /// e_ij^(n) in canonical form; diagonal generators are expanded in the
  /// Cartan basis.
  Element inject(int i, int j, int level) const;
  Element central() const { return Element(Symbol::central()); }
  Element cartan(int i, int level) const;

  /// The bracket of two canonical basis symbols.
  Element basis_bracket(const Symbol& a, const Symbol& b) const;
  Element bracket(const Element& a, const Element& b) const;
  Element jacobi_residual(const Element& a, const Element& b, const Element& c) const;

  /// Every canonical symbol with |level| <= max_level, plus the central element.
  std::vector<Symbol> basis(int max_level) const;

  /// Expansion of a canonical symbol into raw generators (central omitted).
  std::vector<RawTerm> expand(const Symbol& s) const;

  /// Canonicalizes a raw combination of e_ij^(n) (diagonal content is
  /// projected onto the trace-free Cartan basis).
  Element canonicalize(const std::vector<RawTerm>& raw, const Rational& central_weight = 0) const;

  void check_index(int i) const;

 private:
  int n_;
};

}  // namespace slnaw::loop
