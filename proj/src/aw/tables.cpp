#include "slnaw/aw/tables.hpp"

#include <functional>

#include "slnaw/aw/alpha_field.hpp"
#include "slnaw/exactnum/errors.hpp"

namespace slnaw::aw {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

/// Terms (coefficient, symbol name) resolved through the table's dependents.
AWElement combo(const StructTable& t, std::initializer_list<std::pair<ParamPoly, std::string>> terms) {
  AWElement r;
  for (const auto& [c, name] : terms) r += c * t.symbol(name);
  return r;
}

std::string sym(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

/// Fills every basis pair from a rule defined on (kind_a, i, kind_b, j) with
/// kind_a <= kind_b in the given kind order.
void fill(StructTable& t, const std::string& kinds,
          const std::function<AWElement(char, int, char, int)>& rule) {
  for (int a = 0; a < t.dim(); ++a) {
    for (int b = a + 1; b < t.dim(); ++b) {
      const std::string& na = t.basis()[static_cast<std::size_t>(a)];
      const std::string& nb = t.basis()[static_cast<std::size_t>(b)];
      const char ka = na[0];
      const char kb = nb[0];
      const int ia = std::stoi(na.substr(1));
      const int ib = std::stoi(nb.substr(1));
      if (kinds.find(ka) <= kinds.find(kb)) {
        t.set_bracket(a, b, rule(ka, ia, kb, ib));
      } else {
        t.set_bracket(b, a, rule(kb, ib, ka, ia));
      }
    }
  }
}

}  // namespace

StructTable aw3_table(Aw3Variant variant) {
  StructTable t("AW3", {"e1", "e2", "e3", "f1", "f2", "f3", "g1", "g2"}, alpha_alphabet());
  t.define_dependent("g3", -AWElement(6) - AWElement(7));
  const ParamPoly a = alpha();
  fill(t, "efg", [&](char x, int i, char y, int j) -> AWElement {
    AWElement r;
    const ParamPoly same(i == j ? 1 : 0);
    if (x == 'e' && y == 'e') {
      for (int k = 1; k <= 3; ++k) r += ParamPoly(levi_civita(i, j, k)) * t.symbol(sym('f', k));
    } else if (x == 'e' && y == 'f') {
      r += same * t.symbol(sym('g', i));
      for (int k = 1; k <= 3; ++k) r -= ParamPoly(levi_civita(i, j, k)) * t.symbol(sym('e', k));
    } else if (x == 'e' && y == 'g') {
      r = combo(t, {{a, sym('e', i)}, {ParamPoly(-2), sym('f', i)}});
      r += (ParamPoly(3) * same) * combo(t, {{ParamPoly(2), sym('f', i)}, {-a, sym('e', i)}});
    } else if (x == 'f' && y == 'f') {
      for (int k = 1; k <= 3; ++k) {
        AWElement inner = t.symbol(sym('f', k));
        if (!variant.drop_alpha_in_ff) inner -= a * t.symbol(sym('e', k));
        r += ParamPoly(levi_civita(i, j, k)) * inner;
      }
    } else if (x == 'f' && y == 'g') {
      r = combo(t, {{-a, sym('f', i)}, {ParamPoly(variant.flip_e_in_fg ? 2 : -2), sym('e', i)}});
      r += (ParamPoly(3) * same) * combo(t, {{a, sym('f', i)}, {ParamPoly(2), sym('e', i)}});
    }
    return r;
  });
  t.set_generators({0, 1, 2});
  for (int i = 1; i <= 3; ++i) t.set_word(i - 1, FreeWord::generator(i));
  t.set_word(3, FreeWord::parse("[e2,e3]"));
  t.set_word(4, FreeWord::parse("[e3,e1]"));
  t.set_word(5, FreeWord::parse("[e1,e2]"));
  t.set_word(6, FreeWord::parse("[e1,[e2,e3]]"));
  t.set_word(7, FreeWord::parse("[e2,[e3,e1]]"));
  return t;
}

StructTable aw4_table() {
  std::vector<std::string> basis;
  for (char k : std::string("efg")) {
    for (int i = 1; i <= 4; ++i) basis.push_back(sym(k, i));
  }
  for (int i = 1; i <= 3; ++i) basis.push_back(sym('h', i));
  StructTable t("AW4", basis, alpha_alphabet());
  t.define_dependent("h4", -AWElement(12) - AWElement(13) - AWElement(14));
  const ParamPoly a = alpha();
  auto m = [](int i) { return ((i - 1) % 4 + 4) % 4 + 1; };
  auto d = [&](int p, int q) { return ParamPoly(m(p) == m(q) ? 1 : 0); };
  auto E = [&](int i) { return t.symbol(sym('e', m(i))); };
  auto F = [&](int i) { return t.symbol(sym('f', m(i))); };
  auto G = [&](int i) { return t.symbol(sym('g', m(i))); };
  auto H = [&](int i) { return t.symbol(sym('h', m(i))); };
  fill(t, "efgh", [&](char x, int i, char y, int j) -> AWElement {
    if (x == y && i > j) std::swap(i, j), std::swap(x, y);  // rules below are antisymmetric in this case
    AWElement r;
    if (x == 'e' && y == 'e') {
      if (m(j) == m(i + 1)) r = F(i + 2);
      if (m(i) == m(j + 1)) r = -F(j + 2);
    } else if (x == 'e' && y == 'f') {
      r = d(i, j) * G(i + 1) - d(j, i - 1) * G(i - 1) - d(j, i + 1) * E(i - 1) + d(j, i + 2) * E(i + 1);
    } else if (x == 'e' && y == 'g') {
      r = -(d(i, j) * H(i)) + d(j, i + 1) * F(i) - d(j, i - 1) * F(i - 1);
    } else if (x == 'e' && y == 'h') {
      AWElement core = a * E(i) + ParamPoly(2) * G(i);
      r = -(d(i, j) * (ParamPoly(2) * core)) + (d(j, i + 1) + d(j, i - 1)) * core;
    } else if (x == 'f' && y == 'f') {
      if (m(j) == m(i + 2)) r = -H(i) - H(i + 1);
    } else if (x == 'f' && y == 'g') {
      r = -(d(j, i - 1) * (a * E(i - 2) + G(i - 2))) + d(j, i - 2) * (a * E(i - 1) + G(i - 1)) - d(i, j) * E(i + 1) +
          d(j, i + 1) * E(i);
    } else if (x == 'f' && y == 'h') {
      r = (d(i, j) - d(j, i - 1) + d(j, i + 1) - d(j, i - 2)) * (a * F(i) + ParamPoly(2) * F(i + 2));
    } else if (x == 'g' && y == 'g') {
      if (m(j) == m(i + 1)) r = -(a * F(i)) - F(i + 2);
      if (m(i) == m(j + 1)) r = a * F(j) + F(j + 2);
    } else if (x == 'g' && y == 'h') {
      r = d(i, j) * (ParamPoly(4) * E(i) + ParamPoly(2) * a * G(i)) -
          (d(j, i + 1) + d(j, i - 1)) * (ParamPoly(2) * E(i) + a * G(i));
    }
    return r;
  });
  t.set_generators({0, 1, 2, 3});
  for (int i = 1; i <= 4; ++i) {
    t.set_word(i - 1, FreeWord::generator(i));
    // f_{i+2} = [e_i, e_{i+1}]
    t.set_word(4 + m(i + 2) - 1, FreeWord::chain(i, i + 1, 4));
    // g_i = -[e_{i+1},[e_{i+2},e_{i+3}]] so the stored word carries a sign, see match_tables
    t.set_word(8 + i - 1, FreeWord::chain(i + 1, i + 3, 4));
  }
  for (int i = 1; i <= 3; ++i) t.set_word(12 + i - 1, FreeWord::chain(i, i + 3, 4));
  return t;
}

SpectralLaurent aw_denominator(int n, std::size_t var) {
  const Alphabet* xy = rmatrix::two_point_vars();
  SpectralExponents one{0, 0, 0}, up{0, 0, 0}, down{0, 0, 0};
  up[var] = 1;
  down[var] = -1;
  SpectralLaurent d(xy);
  d.add_term(one, alpha());
  d.add_term(up, ParamPoly(sign_power(n + 1)));
  d.add_term(down, ParamPoly(-1));
  return d;
}

namespace {

using Series = Laurent<AWElement>;

struct Cell {
  int row;
  int col;
  std::vector<std::tuple<int, Rational, std::string>> terms;  // (x exponent, coefficient, symbol)
};

AWMatrix from_cells(int n, const StructTable& t, const std::vector<Cell>& cells) {
  const Alphabet* xy = rmatrix::two_point_vars();
  AWMatrix b;
  b.n = n;
  b.denominator = aw_denominator(n, 0);
  b.numerator = LieMatrix<AWElement>(n, 1);
  for (const Cell& c : cells) {
    Series s(xy);
    for (const auto& [e, q, name] : c.terms) s += Series::monomial(xy, {e, 0, 0}, ParamPoly(q) * t.symbol(name));
    b.numerator.add(static_cast<std::uint32_t>(c.row - 1), static_cast<std::uint32_t>(c.col - 1), s);
  }
  return b;
}

}  // namespace

AWMatrix build_B_aw(int n, const StructTable& t) {
  const Rational one(1);
  auto q = [](long p, long r) { return rational(p, r); };
  if (n == 3) {
    return from_cells(3, t,
                      {{1, 1, {{0, q(2, 3), "g1"}, {0, q(1, 3), "g2"}}},
                       {1, 2, {{0, one, "f1"}, {-1, -one, "e1"}}},
                       {1, 3, {{0, one, "e3"}, {-1, one, "f3"}}},
                       {2, 1, {{1, -one, "e1"}, {0, -one, "f1"}}},
                       {2, 2, {{0, q(-1, 3), "g1"}, {0, q(1, 3), "g2"}}},
                       {2, 3, {{0, one, "f2"}, {-1, -one, "e2"}}},
                       {3, 1, {{0, one, "e3"}, {1, -one, "f3"}}},
                       {3, 2, {{1, -one, "e2"}, {0, -one, "f2"}}},
                       {3, 3, {{0, q(-1, 3), "g1"}, {0, q(-2, 3), "g2"}}}});
  }
  if (n == 4) {
    return from_cells(4, t,
                      {{1, 1, {{0, q(3, 4), "h1"}, {0, q(1, 2), "h2"}, {0, q(1, 4), "h3"}}},
                       {1, 2, {{0, one, "g1"}, {-1, one, "e1"}}},
                       {1, 3, {{0, one, "f1"}, {-1, one, "f3"}}},
                       {1, 4, {{0, -one, "e4"}, {-1, -one, "g4"}}},
                       {2, 1, {{0, -one, "g1"}, {1, -one, "e1"}}},
                       {2, 2, {{0, q(-1, 4), "h1"}, {0, q(1, 2), "h2"}, {0, q(1, 4), "h3"}}},
                       {2, 3, {{0, one, "g2"}, {-1, one, "e2"}}},
                       {2, 4, {{0, one, "f2"}, {-1, one, "f4"}}},
                       {3, 1, {{0, one, "f1"}, {1, one, "f3"}}},
                       {3, 2, {{0, -one, "g2"}, {1, -one, "e2"}}},
                       {3, 3, {{0, q(-1, 4), "h1"}, {0, q(-1, 2), "h2"}, {0, q(1, 4), "h3"}}},
                       {3, 4, {{0, one, "g3"}, {-1, one, "e3"}}},
                       {4, 1, {{0, one, "e4"}, {1, one, "g4"}}},
                       {4, 2, {{0, one, "f2"}, {1, one, "f4"}}},
                       {4, 3, {{0, -one, "g3"}, {1, -one, "e3"}}},
                       {4, 4, {{0, q(-1, 4), "h1"}, {0, q(-1, 2), "h2"}, {0, q(-3, 4), "h3"}}}});
  }
  throw ConfigurationError("explicit quotient matrices exist for N = 3 and N = 4 only");
}

std::vector<Check> check_reflection_aw(const StructTable& t, const AWMatrix& b) {
  std::vector<Check> out;
  auto bracket = [&t](const AWElement& p, const AWElement& q) { return t.bracket(p, q); };
  LieMatrix<AWElement> residual = aw_reflection_residual(b, bracket);
  auto all = [](const SpectralExponents&) { return true; };
  auto render = [&t](const AWElement& e) { return t.render(e); };
  const std::string name = "reflection relation (exact, no truncation)";
  if (auto loc = first_difference<AWElement>(residual, all, render)) {
    out.push_back(Check::fail(name, *loc));
  } else {
    out.push_back(Check::pass(name, "cleared by (x-y)(xy-(-1)^N) x y d(x) d(y)"));
  }
  Laurent<AWElement> tr = b.numerator.trace();
  if (tr.is_zero()) {
    out.push_back(Check::pass("tr B(x) = 0"));
  } else {
    const auto& [e, c] = *tr.terms().begin();
    out.push_back(Check::fail("tr B(x) = 0", Locator{"trace", monomial_locator(tr.vars(), e), t.render(c)}));
  }
  return out;
}

namespace {

FreeWord gen(int i, int n) { return FreeWord::generator(((i - 1) % n + n) % n + 1); }
FreeWord br(const FreeWord& a, const FreeWord& b) { return FreeWord::bracket(a, b); }

Check relation_failure(const std::string& name, const std::string& where, const StructTable& t, const AWElement& r) {
  return Check::fail(name, Locator{where, {}, t.render(r)});
}

}  // namespace

Check check_three_generator_presentation(const StructTable& t) {
  const std::string name = "three-generator presentation";
  const ParamPoly a = alpha();
  const std::vector<std::pair<std::string, std::string>> defs = {
      {"f1", "[e2,e3]"}, {"f2", "[e3,e1]"}, {"f3", "[e1,e2]"}, {"g1", "[e1,[e2,e3]]"}, {"g2", "[e2,[e3,e1]]"}};
  for (const auto& [s, w] : defs) {
    AWElement r = eval_word(FreeWord::parse(w), t) - t.symbol(s);
    if (!r.is_zero()) return relation_failure(name, s + " = " + w, t, r);
  }
  auto ev = [&t](const FreeWord& w) { return eval_word(w, t); };
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      AWElement r = ev(br(gen(i, 3), br(gen(i, 3), gen(j, 3)))) - ev(gen(j, 3));
      if (!r.is_zero()) {
        return relation_failure(name, "[e" + std::to_string(i) + ",[e" + std::to_string(i) + ",e" + std::to_string(j) + "]]", t, r);
      }
      for (int k = 1; k <= 3; ++k) {
        if (k == i || k == j) continue;
        const ParamPoly eps(levi_civita(i, j, k));
        AWElement q = ev(br(br(gen(i, 3), gen(j, 3)), br(gen(j, 3), gen(k, 3)))) + ev(br(gen(i, 3), gen(k, 3))) +
                      (a * eps) * ev(gen(j, 3));
        if (!q.is_zero()) return relation_failure(name, "alpha-twisted relation (i,j,k)", t, q);
        AWElement four = ev(br(gen(i, 3), br(gen(j, 3), br(gen(k, 3), gen(i, 3))))) - (a * eps) * ev(gen(i, 3)) +
                         ParamPoly(2) * ev(br(gen(j, 3), gen(k, 3)));
        if (!four.is_zero()) return relation_failure(name, "four-fold relation (i,j,k)", t, four);
      }
    }
  }
  return Check::pass(name, "defining words, 6 + 6 + 6 relations");
}

Check check_four_generator_presentation(const StructTable& t) {
  const std::string name = "four-generator presentation";
  const ParamPoly a = alpha();
  auto ev = [&t](const FreeWord& w) { return eval_word(w, t); };
  for (int i = 1; i <= 4; ++i) {
    auto e = [i](int k) { return gen(i + k, 4); };
    const std::string at = " at i=" + std::to_string(i);
    for (int s : {1, -1}) {
      AWElement r = ev(br(e(0), br(e(0), e(s)))) - ev(e(s));
      if (!r.is_zero()) return relation_failure(name, "Serre-type relation" + at, t, r);
    }
    AWElement b = ev(br(e(0), e(2)));
    if (!b.is_zero()) return relation_failure(name, "[e_i, e_{i+2}] = 0" + at, t, b);
    AWElement c = ev(br(br(e(0), e(1)), br(e(1), e(2))));
    if (!c.is_zero()) return relation_failure(name, "[[e_i,e_{i+1}],[e_{i+1},e_{i+2}]] = 0" + at, t, c);
    AWElement d = ev(br(br(e(0), e(1)), br(e(1), br(e(2), e(3))))) + a * ev(e(1)) + ev(br(e(0), br(e(2), e(3))));
    if (!d.is_zero()) return relation_failure(name, "depth-4 relation" + at, t, d);
    FreeWord w = br(e(0), br(e(1), e(2)));
    AWElement f = ev(br(w, br(e(3), w))) + ParamPoly(4) * ev(e(3)) - (ParamPoly(2) * a) * ev(w);
    if (!f.is_zero()) return relation_failure(name, "depth-7 relation" + at, t, f);
  }
  return Check::pass(name, "i = 1..4");
}

namespace {

SparseRow to_row(const AWElement& e) {
  SparseRow r;
  for (const auto& [k, c] : e.terms()) r.emplace(k, AlphaFraction(AlphaPoly::from(c)));
  return r;
}

}  // namespace

Check check_generation_rank(const StructTable& t, int depth) {
  std::vector<AWElement> layer;
  std::vector<AWElement> all;
  for (int g : t.generators()) layer.emplace_back(g);
  all = layer;
  for (int d = 2; d <= depth; ++d) {
    std::vector<AWElement> next;
    for (int g : t.generators()) {
      for (const auto& e : layer) {
        AWElement v = t.bracket(AWElement(g), e);
        if (!v.is_zero()) next.push_back(v);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<SparseRow> rows;
  for (const auto& e : all) rows.push_back(to_row(e));
  const int r = rank(rows);
  std::string name = "generators span the algebra by depth " + std::to_string(depth);
  std::string note = "rank " + std::to_string(r) + " of dimension " + std::to_string(t.dim());
  if (r != t.dim()) return Check::fail(name, Locator{"span", {}, note});
  return Check::pass(name, note);
}

Report aw_report(int n) {
  Report rep;
  rep.command = "verify aw";
  rep.params = {{"n", std::to_string(n)}};
  if (n != 3 && n != 4) throw ConfigurationError("verify aw supports N = 3 and N = 4");
  StructTable t = n == 3 ? aw3_table() : aw4_table();
  rep.add(check_jacobi(t));
  for (auto& c : check_reflection_aw(t, build_B_aw(n, t))) rep.add(std::move(c));
  if (n == 3) {
    rep.add(check_three_generator_presentation(t));
    rep.add(check_generation_rank(t));
  } else {
    rep.add(check_four_generator_presentation(t));
  }
  return rep;
}

}  // namespace slnaw::aw
