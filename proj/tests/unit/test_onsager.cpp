#include <doctest.h>

#include <random>

#include "slnaw/exactnum/errors.hpp"
#include "slnaw/frt/automorphisms.hpp"
#include "slnaw/onsager/b_matrix.hpp"
#include "slnaw/onsager/onsager_algebra.hpp"

using namespace slnaw;
using onsager::Element;
using onsager::OnsagerAlgebra;
using onsager::Symbol;

namespace {

Element B(int i, int j, int level) { return Element(Symbol{level, i, j}); }

}  // namespace

TEST_CASE("canonical reduction") {
  OnsagerAlgebra o(3);
  CHECK(o.canonical(2, 1, 0) == B(1, 2, 0));
  CHECK(o.canonical(1, 1, 0).is_zero());
  CHECK(o.canonical(1, 2, -2) == B(2, 1, 2));
  CHECK(o.canonical(3, 3, 1) == -B(1, 1, 1) - B(2, 2, 1));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int n = -2; n <= 2; ++n) {
        Element c = o.canonical(i, j, n);
        Element again = c.map_linear<Element>([&](const Symbol& s) { return o.canonical(s.i, s.j, s.level); });
        CHECK(again == c);
      }
    }
  }
}

TEST_CASE("embedding into the affine algebra") {
  OnsagerAlgebra o(3);
  const auto& g = o.loop_algebra();
  CHECK(o.embed(Symbol{0, 1, 2}) == g.inject(1, 2, 0) + g.inject(2, 1, 0));
  CHECK(o.embed(Symbol{0, 1, 3}) == g.inject(1, 3, 0) - g.inject(3, 1, 0));
  auto th = frt::theta1(g);
  for (const auto& s : o.basis(2)) CHECK(th.apply(o.embed(s)) == o.embed(s));
}

TEST_CASE("abstract bracket examples") {
  OnsagerAlgebra o(3);
  CHECK(o.bracket(B(1, 2, 0), B(2, 3, 0)) == B(1, 3, 0));
  const auto& g = o.loop_algebra();
  CHECK(g.bracket(o.embed(B(1, 2, 0)), o.embed(B(2, 3, 0))) == o.embed(B(1, 3, 0)));
}

TEST_CASE("abstract presentation agrees with the affine algebra") {
  CHECK(check_presentation_agreement(OnsagerAlgebra(2), 4).passed());
  CHECK(check_presentation_agreement(OnsagerAlgebra(3), 3).passed());
  CHECK(check_antisymmetry(OnsagerAlgebra(3), 2).passed());
  CHECK(check_canonical_forms(OnsagerAlgebra(4), 2).passed());
}

TEST_CASE("a flipped relation sign is detected") {
  Check c = check_presentation_agreement(OnsagerAlgebra(3, 0), 1);
  CHECK_FALSE(c.passed());
  CHECK(c.locator.has_value());
}

TEST_CASE("A/G relations") {
  OnsagerAlgebra o(3);
  // [G_1^(1), A_13^(1)] = A_13^(2) - (-1)^3 A_13^(0)
  CHECK(o.bracket(o.g(1, 1), o.a(1, 3, 1)) == o.a(1, 3, 2) + o.a(1, 3, 0));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) CHECK(o.bracket(o.g(i, m), o.g(j, n)).is_zero());
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : check_ui_relations(OnsagerAlgebra(n), 2)) CHECK_MESSAGE(c.passed(), c.name);
  }
}

TEST_CASE("the empty-sum reading of the diagonal collision fails") {
  bool any_failed = false;
  for (const auto& c : check_ui_relations(OnsagerAlgebra(3), 2, false)) any_failed = any_failed || !c.passed();
  CHECK(any_failed);
}

TEST_CASE("N-generator presentation") {
  for (int n = 3; n <= 4; ++n) CHECK(check_generator_presentation(OnsagerAlgebra(n)).passed());
  CHECK(check_generator_presentation(OnsagerAlgebra(2)).status == Status::Skipped);
}

TEST_CASE("B(x) has no constant diagonal and matches T+ + theta1(T+)") {
  OnsagerAlgebra o(3);
  auto b = onsager::build_B_matrix(o, 4);
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(b.at(i, i).coeff({0, 0, 0}).is_zero());
  CHECK(onsager::check_Bxg(3, 4).passed());
  CHECK(onsager::check_B_trace(o, b).passed());
}

TEST_CASE("reflection relation and its unfolded control") {
  CHECK(onsager::check_reflection(2, 6).passed());
  CHECK(onsager::check_reflection(3, 5).passed());
  Check bad = onsager::check_reflection(2, 6, false);
  CHECK_FALSE(bad.passed());
  CHECK(bad.locator.has_value());
}

TEST_CASE("current relations") {
  CHECK(onsager::check_currents(2, 6).passed());
  CHECK(onsager::check_currents(3, 5).passed());
  OnsagerAlgebra o(2);
  // B_21 starts at x^0, B_12 at x^1
  CHECK_FALSE(onsager::build_current(o, 2, 1, 3, 0).coeff({0, 0, 0}).is_zero());
  CHECK(onsager::build_current(o, 1, 2, 3, 0).coeff({0, 0, 0}).is_zero());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(OnsagerAlgebra(1), ConfigurationError);
  CHECK_THROWS_AS(onsager::check_reflection(2, 1), ConfigurationError);
}

TEST_CASE("oracle equivalence on random combinations") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 4; ++n) {
    OnsagerAlgebra o(n);
    auto basis = o.basis(2);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_element = [&] {
      Element e;
      for (int k = 0; k < 4; ++k) e.add_term(basis[pick(rng)], ParamPoly(coef(rng)));
      return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
      Element a = random_element();
      Element b = random_element();
      CHECK(o.embed(o.bracket(a, b)) == o.loop_algebra().bracket(o.embed(a), o.embed(b)));
      CHECK(o.bracket(a, b) == -o.bracket(b, a));
    }
  }
}
