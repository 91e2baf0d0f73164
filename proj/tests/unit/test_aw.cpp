#include <doctest.h>

#include <random>

#include "slnaw/aw/alpha_field.hpp"
#include "slnaw/aw/extraction.hpp"
#include "slnaw/exactnum/errors.hpp"

using namespace slnaw;
using namespace slnaw::aw;

namespace {

AWElement S(const StructTable& t, const char* name) { return t.symbol(name); }
AWElement W(const StructTable& t, const char* word) { return eval_word(FreeWord::parse(word), t); }

Laurent<AWElement> entry(const AWMatrix& b, int i, int j) {
  return b.numerator.at(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1));
}

}  // namespace

TEST_CASE("Q(alpha) arithmetic") {
  AlphaPoly a({Rational(-1), Rational(0), Rational(1)});  // alpha^2 - 1
  AlphaPoly b({Rational(1), Rational(1)});                // alpha + 1
  CHECK(AlphaPoly::gcd(a, b) == b);
  auto [q, r] = AlphaPoly::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == AlphaPoly({Rational(-1), Rational(1)}));
  AlphaFraction f(a, b);
  REQUIRE(f.as_poly().has_value());
  CHECK(*f.as_poly() == q);
  CHECK((AlphaFraction(1) / AlphaFraction(b)) * AlphaFraction(b) == AlphaFraction(1));
}

TEST_CASE("sparse solve reports free unknowns and inconsistency") {
  // X0 + X1 = w0, X0 - X1 = w1
  LinearSystem s{2, {{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, -1}, {3, 1}}}};
  LinearSolution sol = solve(s);
  CHECK(sol.consistent());
  CHECK(sol.unique());
  CHECK(sol.values.at(0) == SparseRow{{0, AlphaFraction(AlphaPoly({rational(1, 2)}))}, {1, AlphaFraction(AlphaPoly({rational(1, 2)}))}});
  LinearSystem under{2, {{{0, 1}, {1, 1}, {2, 1}}}};
  CHECK_FALSE(solve(under).unique());
  LinearSystem bad{1, {{{0, 1}, {1, 1}}, {{0, 1}, {2, 1}}}};
  CHECK_FALSE(solve(bad).consistent());
}

TEST_CASE("free words") {
  FreeWord w = FreeWord::chain(2, 1, 3);
  CHECK(w.to_string() == "[e2,[e3,e1]]");
  CHECK(w.length() == 3);
  CHECK(FreeWord::parse(w.to_string()) == w);
  CHECK(FreeWord::chain(4, 4, 4).is_generator());
  CHECK_THROWS_AS(FreeWord::parse("[e1,e2"), ParseError);
}

TEST_CASE("rank-2 table examples") {
  StructTable t = aw3_table();
  const ParamPoly a = alpha();
  CHECK(t.bracket(S(t, "e1"), S(t, "e2")) == S(t, "f3"));
  CHECK(t.bracket(S(t, "e1"), S(t, "f1")) == S(t, "g1"));
  CHECK(t.bracket(S(t, "e1"), S(t, "g1")) == ParamPoly(-2) * a * S(t, "e1") + ParamPoly(4) * S(t, "f1"));
  CHECK(S(t, "g3") == -S(t, "g1") - S(t, "g2"));
  CHECK(t.dim() == 8);
}

TEST_CASE("Jacobi for both tables and the dropped-alpha control") {
  CHECK(check_jacobi(aw3_table()).passed());
  CHECK(check_jacobi(aw4_table()).passed());
  Check bad = check_jacobi(aw3_table({true, false}));
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.locator.has_value());
  CHECK(bad.locator->entry.find('e') != std::string::npos);
}

TEST_CASE("explicit B(x) entries") {
  StructTable t3 = aw3_table();
  AWMatrix b3 = build_B_aw(3, t3);
  CHECK(b3.prefactor == 2);
  CHECK(entry(b3, 1, 1).coeff({0, 0, 0}) ==
        ParamPoly(rational(2, 3)) * S(t3, "g1") + ParamPoly(rational(1, 3)) * S(t3, "g2"));
  CHECK(entry(b3, 2, 1).coeff({1, 0, 0}) == -S(t3, "e1"));
  CHECK(entry(b3, 2, 1).coeff({0, 0, 0}) == -S(t3, "f1"));
  StructTable t4 = aw4_table();
  AWMatrix b4 = build_B_aw(4, t4);
  CHECK(entry(b4, 1, 4).coeff({0, 0, 0}) == -S(t4, "e4"));
  CHECK(entry(b4, 1, 4).coeff({-1, 0, 0}) == -S(t4, "g4"));
  CHECK_THROWS_AS(build_B_aw(5, t4), ConfigurationError);
}

TEST_CASE("exact reflection relation") {
  for (int n : {3, 4}) {
    StructTable t = n == 3 ? aw3_table() : aw4_table();
    for (const auto& c : check_reflection_aw(t, build_B_aw(n, t))) CHECK_MESSAGE(c.passed(), c.name);
  }
  StructTable bad = aw3_table({false, true});
  CHECK_FALSE(check_reflection_aw(bad, build_B_aw(3, bad)).front().passed());
}

TEST_CASE("three-generator presentation") {
  StructTable t = aw3_table();
  CHECK(W(t, "[e1,[e2,e3]]") == S(t, "g1"));
  CHECK(W(t, "[[e1,e2],[e2,e3]]") + W(t, "[e1,e3]") + alpha() * S(t, "e2") == AWElement());
  CHECK(check_three_generator_presentation(t).passed());
  CHECK(check_generation_rank(t).passed());
  CHECK_FALSE(check_generation_rank(t, 2).passed());
}

TEST_CASE("four-generator presentation") {
  StructTable t = aw4_table();
  AWElement w = W(t, "[e1,[e2,e3]]");
  CHECK(W(t, "[[e1,[e2,e3]],[e4,[e1,[e2,e3]]]]") == ParamPoly(-4) * S(t, "e4") + ParamPoly(2) * alpha() * w);
  CHECK(check_four_generator_presentation(t).passed());
  CHECK(check_generation_rank(t, 4).passed());
}

TEST_CASE("table export round trip") {
  for (const StructTable& t : {aw3_table(), aw4_table()}) {
    const std::string text = export_table(t);
    StructTable back = import_table(text);
    CHECK(back == t);
    CHECK(export_table(back) == text);
  }
  CHECK_THROWS_AS(import_table("{\"schema\": 2}"), ParseError);
}

TEST_CASE("general ansatz") {
  GeneralAnsatz a3 = build_B_general(3);
  CHECK(a3.words.size() == 8);
  CHECK(build_B_general(4).words.size() == 15);
  CHECK(build_B_general(5).words.size() == 24);
  CHECK(select_convention(3) == Convention::Literal);
  CHECK(select_convention(4) == Convention::Literal);
  StructTable t = aw3_table();
  CHECK(specialize_ansatz(a3, t).numerator == build_B_aw(3, t).numerator);
  CHECK_THROWS_AS(build_B_general(2), ConfigurationError);
  CHECK(parse_convention("no-outer-sign") == Convention::NoOuterSign);
  CHECK_THROWS_AS(parse_convention("other"), ConfigurationError);
}

TEST_CASE("matching tables") {
  StructTable t = aw3_table();
  TableMatch self = match_tables(t, t);
  CHECK(self.found);
  CHECK(self.signs == std::vector<int>{1, 1, 1});
  TableMatch flipped = match_tables(t, rescale_basis(t, 0, Rational(-1)));
  CHECK(flipped.found);
  CHECK(flipped.signs == std::vector<int>{-1, 1, 1});
  TableMatch wrong = match_tables(t, aw3_table({true, false}));
  CHECK_FALSE(wrong.found);
  CHECK(wrong.check.locator.has_value());
}

TEST_CASE("extraction reproduces the explicit tables") {
  for (int n : {3, 4}) {
    Extraction ex = extract_structure_constants(n);
    CHECK(ex.report.all_passed());
    REQUIRE(ex.table.has_value());
    StructTable ref = n == 3 ? aw3_table() : aw4_table();
    TableMatch m = match_tables(ref, *ex.table);
    CHECK(m.found);
  }
}

TEST_CASE("N = 5 extraction") {
  Extraction ex = extract_structure_constants(5);
  CHECK(ex.report.all_passed());
  REQUIRE(ex.table.has_value());
  CHECK(ex.table->dim() == 24);
  StructTable back = import_table(export_table(*ex.table));
  CHECK(back == *ex.table);
  Extraction alt = extract_structure_constants(5, Convention::NoOuterSign);
  CHECK_FALSE(alt.report.all_passed());
  CHECK_FALSE(alt.table.has_value());
}

TEST_CASE("extracted N = 5 bracket on random combinations") {
  Extraction ex = extract_structure_constants(5);
  REQUIRE(ex.table.has_value());
  const StructTable& t = *ex.table;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, t.dim() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_element = [&] {
    AWElement e;
    for (int k = 0; k < 3; ++k) e.add_term(pick(rng), ParamPoly(coef(rng)) + ParamPoly(coef(rng)) * alpha());
    return e;
  };
  for (int trial = 0; trial < 25; ++trial) {
    AWElement a = random_element();
    AWElement b = random_element();
    AWElement c = random_element();
    CHECK(t.bracket(a, b) == -t.bracket(b, a));
    CHECK((t.bracket(a, t.bracket(b, c)) + t.bracket(b, t.bracket(c, a)) + t.bracket(c, t.bracket(a, b))).is_zero());
  }
}
