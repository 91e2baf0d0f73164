#pragma once

#include <functional>
#include <string>

#include "slnaw/core/report.hpp"
#include "slnaw/loop/loop_algebra.hpp"

namespace slnaw::frt {

/// Linear map of the affine algebra given on canonical basis symbols.
class LoopAutomorphism {
 public:
  using BasisMap = std::function<loop::Element(const loop::Symbol&)>;

  LoopAutomorphism(std::string name, BasisMap on_basis) : name_(std::move(name)), on_basis_(std::move(on_basis)) {}

  const std::string& name() const { return name_; }
  loop::Element apply(const loop::Symbol& s) const { return on_basis_(s); }
  loop::Element apply(const loop::Element& e) const;

 private:
  std::string name_;
  BasisMap on_basis_;
};

/// theta1(e_ij^(n)) = (-1)^{Nn+i+j+sign_offset} e_ji^(-n), theta1(c) = -c.
/// The literal automorphism has sign_offset = 1; other values exist only for
/// negative controls.
LoopAutomorphism theta1(const loop::LoopAlgebra& alg, int sign_offset = 1);

/// The block automorphism for even N with sign parameter epsilon = ±1,
/// following the three index cases literally.
LoopAutomorphism theta2(const loop::LoopAlgebra& alg, int epsilon);

/// theta([a,b]) = [theta(a), theta(b)] on all basis pairs with |level| <= L.
Check check_morphism(const loop::LoopAlgebra& alg, const LoopAutomorphism& theta, int max_level);
/// theta(theta(a)) = a on all basis symbols with |level| <= L.
Check check_involution(const loop::LoopAlgebra& alg, const LoopAutomorphism& theta, int max_level);

}  // namespace slnaw::frt
