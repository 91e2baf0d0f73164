#include <doctest.h>

#include "slnaw/exactnum/errors.hpp"
#include "slnaw/frt/generators.hpp"

using namespace slnaw;
using loop::Element;
using loop::LoopAlgebra;

namespace {

Element coeff(const frt::GeneratorMatrix& t, int row, int col, int power) {
  return t.entries.at(static_cast<std::uint32_t>(row - 1), static_cast<std::uint32_t>(col - 1)).coeff({power, 0, 0});
}

}  // namespace

TEST_CASE("T+ entries for N = 3") {
  LoopAlgebra g(3);
  const int d = 3;
  auto tp = frt::build_T(g, 1, d);
  for (int p = 0; p <= d; ++p) CHECK(coeff(tp, 1, 2, p) == g.inject(2, 1, p).scaled_by(2));
  CHECK(coeff(tp, 2, 1, 0).is_zero());
  CHECK(coeff(tp, 2, 1, 1) == g.inject(1, 2, 1).scaled_by(2));
  CHECK(coeff(tp, 1, 2, d + 1).is_zero());
}

TEST_CASE("T- is supported on non-positive powers and lower triangular at x^0") {
  LoopAlgebra g(3);
  auto tm = frt::build_T(g, -1, 3);
  for (const auto& [key, series] : tm.entries.entries()) {
    for (const auto& [e, c] : series.terms()) {
      CHECK(e[0] <= 0);
      CHECK(e[0] >= -3);
      if (e[0] == 0) CHECK(key.first >= key.second);
    }
  }
}

TEST_CASE("tr_1 T vanishes coefficientwise") {
  for (int n = 2; n <= 4; ++n) {
    LoopAlgebra g(n);
    for (int sign : {1, -1}) {
      auto t = frt::build_T(g, sign, 3);
      CHECK(t.entries.trace().is_zero());
    }
  }
}

TEST_CASE("FRT relations hold in the contamination-free window") {
  for (int n = 2; n <= 3; ++n) {
    Report r = frt::frt_report(n, 4);
    CHECK(r.all_passed());
    CHECK(r.checks.size() >= 4);
  }
  CHECK_THROWS_AS(frt::frt_report(2, 1), ConfigurationError);
}

TEST_CASE("dropping the central term breaks the mixed relation") {
  Check c = frt::frt_without_central(2, 6);
  CHECK_FALSE(c.passed());
  REQUIRE(c.locator.has_value());
  // what survives is a multiple of the central element on a diagonal entry
  CHECK(c.locator->entry == "(1,1;1,1)");
  CHECK(c.locator->residual == "(2)*c");
}

TEST_CASE("theta1 on generators") {
  LoopAlgebra g(3);
  auto th = frt::theta1(g);
  CHECK(th.apply(g.inject(1, 2, 1)) == -g.inject(2, 1, -1));
  CHECK(th.apply(g.central()) == -g.central());
  for (int n = 2; n <= 4; ++n) {
    LoopAlgebra h(n);
    CHECK(frt::check_involution(h, frt::theta1(h), 2).passed());
    CHECK(frt::check_morphism(h, frt::theta1(h), 2).passed());
  }
}

TEST_CASE("theta1 with a shifted sign is not a morphism") {
  LoopAlgebra g(3);
  CHECK_FALSE(frt::check_morphism(g, frt::theta1(g, 0), 2).passed());
  CHECK_FALSE(frt::theta1_matrix_form(3, 4, 0).passed());
}

TEST_CASE("theta2 on generators for N = 2") {
  LoopAlgebra g(2);
  auto th = frt::theta2(g, 1);
  CHECK(th.apply(g.inject(1, 2, 0)) == -g.inject(1, 2, 1));
  CHECK(th.apply(g.inject(1, 1, 0)) == -g.inject(2, 2, 0) + g.central().scaled_by(rational(1, 2)));
  CHECK_THROWS_AS(frt::theta2(LoopAlgebra(3), 1), UnsupportedError);
}

TEST_CASE("theta2 is an involutive morphism for even N") {
  for (int n : {2, 4}) {
    LoopAlgebra g(n);
    for (int eps : {1, -1}) {
      auto th = frt::theta2(g, eps);
      CHECK(frt::check_involution(g, th, 2).passed());
      CHECK(frt::check_morphism(g, th, n == 2 ? 2 : 1).passed());
    }
  }
}

TEST_CASE("matrix forms agree with the generator actions") {
  CHECK(frt::theta1_matrix_form(2, 5).passed());
  CHECK(frt::theta1_matrix_form(3, 5).passed());
  CHECK(frt::theta2_matrix_form(2, 4, 1).passed());
  CHECK(frt::theta2_matrix_form(2, 4, -1).passed());
}
