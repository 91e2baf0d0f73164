#include <doctest.h>

#include <map>
#include <random>

#include "slnaw/exactnum/errors.hpp"
#include "slnaw/loop/loop_algebra.hpp"

using namespace slnaw;
using loop::Element;
using loop::LoopAlgebra;
using loop::Symbol;

TEST_CASE("inject expands diagonal generators in the Cartan basis") {
  LoopAlgebra g2(2);
  CHECK(g2.inject(1, 1, 0) == Element(Symbol::cartan(1, 0), ParamPoly(rational(1, 2))));
  LoopAlgebra g3(3);
  Element expected = Element(Symbol::cartan(1, 0), ParamPoly(rational(-1, 3))) +
                     Element(Symbol::cartan(2, 0), ParamPoly(rational(1, 3)));
  CHECK(g3.inject(2, 2, 0) == expected);
  for (int n = 2; n <= 5; ++n) {
    LoopAlgebra g(n);
    for (int level = -2; level <= 2; ++level) {
      Element sum;
      for (int i = 1; i <= n; ++i) sum += g.inject(i, i, level);
      CHECK(sum.is_zero());
    }
  }
  CHECK_THROWS_AS(g3.inject(4, 1, 0), IndexError);
}

TEST_CASE("bracket examples") {
  LoopAlgebra g(3);
  CHECK(g.bracket(g.inject(1, 2, 0), g.inject(2, 3, 0)) == g.inject(1, 3, 0));
  Element expected = g.inject(1, 1, 0) - g.inject(2, 2, 0) + g.central();
  CHECK(g.bracket(g.inject(1, 2, 1), g.inject(2, 1, -1)) == expected);
  CHECK(expected == g.cartan(1, 0) + g.central());
  CHECK(g.bracket(g.central(), g.inject(1, 3, 5)).is_zero());
}

TEST_CASE("central term of diagonal pairs carries the -1/N correction") {
  LoopAlgebra g(3);
  // [h_1^(1), h_1^(-1)] = 1 * c * (2 - 0) = 2c: diagonal part of (e11 - e22)
  CHECK(g.bracket(g.cartan(1, 1), g.cartan(1, -1)) == Element(Symbol::central(), ParamPoly(2)));
  CHECK(g.bracket(g.cartan(1, 2), g.cartan(2, -2)) == Element(Symbol::central(), ParamPoly(-2)));
}

TEST_CASE("antisymmetry and level additivity") {
  for (int n = 2; n <= 5; ++n) {
    LoopAlgebra g(n);
    int max_level = n <= 3 ? 3 : 1;
    auto basis = g.basis(max_level);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        Element ab = g.basis_bracket(a, b);
        Element ba = g.basis_bracket(b, a);
        CHECK((ab + ba).is_zero());
        for (const auto& [s, c] : ab.terms()) {
          if (s.kind == Symbol::Kind::Central) {
            CHECK(a.level + b.level == 0);
          } else {
            CHECK(s.level == a.level + b.level);
          }
        }
      }
    }
  }
}

TEST_CASE("jacobi identity exhaustive at small cutoffs") {
  for (int n = 2; n <= 4; ++n) {
    LoopAlgebra g(n);
    auto basis = g.basis(2);
    std::map<std::pair<std::size_t, std::size_t>, Element> cache;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) cache[{i, j}] = g.basis_bracket(basis[i], basis[j]);
    }
    auto br = [&](std::size_t a, const Element& e) {
      return g.bracket(Element(basis[a]), e);
    };
    long failures = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        for (std::size_t c = b + 1; c < basis.size(); ++c) {
          Element r = br(a, cache[{b, c}]) + br(b, cache[{c, a}]) + br(c, cache[{a, b}]);
          if (!r.is_zero()) ++failures;
        }
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("jacobi identity on random combinations") {
  std::mt19937 rng(42);
  LoopAlgebra g(4);
  auto basis = g.basis(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&] {
    Element e;
    for (int t = 0; t < 3; ++t) e.add_term(basis[pick(rng)], ParamPoly(coef(rng)));
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(g.jacobi_residual(random_element(), random_element(), random_element()).is_zero());
  }
  CHECK(g.jacobi_residual(g.inject(1, 2, 0), g.inject(2, 3, 0), g.inject(3, 1, 0)).is_zero());
}
