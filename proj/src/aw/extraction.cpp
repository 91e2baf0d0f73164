#include "slnaw/aw/extraction.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "slnaw/aw/alpha_field.hpp"
#include "slnaw/exactnum/errors.hpp"

namespace slnaw::aw {

std::string to_string(Convention c) { return c == Convention::Literal ? "literal" : "no-outer-sign"; }

Convention parse_convention(std::string_view s) {
  if (s == "literal") return Convention::Literal;
  if (s == "no-outer-sign") return Convention::NoOuterSign;
  throw ConfigurationError("unknown convention '" + std::string(s) + "' (expected literal or no-outer-sign)");
}

namespace {

using Series = Laurent<AWElement>;

int wrap(int k, int n) { return ((k - 1) % n + n) % n + 1; }

/// Word name: e<i> for generators, f<i>_<j> for chains f_{i,j}.
std::string chain_name(int i, int j, int n) {
  i = wrap(i, n);
  j = wrap(j, n);
  if (i == j) return "e" + std::to_string(i);
  return "f" + std::to_string(i) + "_" + std::to_string(j);
}

template <class F>
AWMatrix remap(const AWMatrix& m, F&& image) {
  AWMatrix r = m;
  r.numerator = m.numerator.template map<Series>([&](const Series& s) {
    Series out(s.vars());
    for (const auto& [e, c] : s.terms()) out.add_term(e, c.template map_linear<AWElement>(image));
    return out;
  });
  return r;
}

}  // namespace

GeneralAnsatz build_B_general(int n, Convention convention) {
  if (n < 3) throw ConfigurationError("the general ansatz needs N >= 3");
  const Alphabet* xy = rmatrix::two_point_vars();
  struct Term {
    int row, col, xexp, sign;
    Rational coeff;
    int from, to;  // chain f_{from,to}
  };
  std::vector<Term> terms;
  const int sN = sign_power(n);
  const bool outer = convention == Convention::Literal;
  auto add = [&](int r, int c, int xexp, Rational q, int from, int to) {
    terms.push_back({r, c, xexp, 1, std::move(q), from, to});
  };
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= n - 1; ++l) {
      add(i, i, 0, i <= l ? rational(n - l, n) : rational(-l, n), l, l - 1);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i == 1 && j == n) {
        add(i, j, 0, Rational(-sN), n, n);
        add(i, j, -1, Rational(1), 1, n - 1);
      } else if (i == n && j == 1) {
        add(i, j, 0, Rational(1), n, n);
        add(i, j, 1, Rational(-1), 1, n - 1);
      } else if (j - i == 1) {
        add(i, j, 0, Rational(-sN), i + 1, i - 1);
        add(i, j, -1, Rational(sN), i, i);
      } else if (i - j == 1) {
        add(i, j, 0, Rational(sN), j + 1, j - 1);
        add(i, j, 1, Rational(-1), j, j);
      } else if (i < j) {
        const int pre = outer ? sign_power((j - i) * (n + 1)) : 1;
        add(i, j, 0, Rational(pre), j, i - 1);
        add(i, j, -1, Rational(pre * sign_power(j - i)), i, j - 1);
      } else {
        const int pre = outer ? sign_power((i - j) * n) : 1;
        add(i, j, 0, Rational(pre), i, j - 1);
        add(i, j, 1, Rational(pre * sign_power(i - j + n)), j, i - 1);
      }
    }
  }

  GeneralAnsatz a;
  a.n = n;
  a.convention = convention;
  std::map<std::string, std::pair<FreeWord, std::string>> by_text;
  for (const Term& t : terms) {
    FreeWord w = FreeWord::chain(t.from, t.to, n);
    by_text.emplace(w.to_string(), std::make_pair(w, chain_name(t.from, t.to, n)));
  }
  std::vector<std::pair<FreeWord, std::string>> order;
  for (auto& [text, v] : by_text) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [](const auto& p, const auto& q) {
    if (p.first.length() != q.first.length()) return p.first.length() < q.first.length();
    if (p.first.is_generator()) return p.first.generator_index() < q.first.generator_index();
    return p.second < q.second;
  });
  std::map<std::string, int> index;
  for (auto& [w, name] : order) {
    index.emplace(w.to_string(), static_cast<int>(a.words.size()));
    a.words.push_back(w);
    a.names.push_back(name);
  }

  a.b.n = n;
  a.b.denominator = aw_denominator(n, 0);
  a.b.numerator = LieMatrix<AWElement>(n, 1);
  for (const Term& t : terms) {
    const int k = index.at(FreeWord::chain(t.from, t.to, n).to_string());
    Series s = Series::monomial(xy, {t.xexp, 0, 0}, AWElement(k, ParamPoly(t.coeff)));
    a.b.numerator.add(static_cast<std::uint32_t>(t.row - 1), static_cast<std::uint32_t>(t.col - 1), s);
  }
  return a;
}

AWMatrix specialize_ansatz(const GeneralAnsatz& a, const StructTable& t) {
  std::vector<AWElement> values;
  for (const auto& w : a.words) values.push_back(eval_word(w, t));
  return remap(a.b, [&](int k) { return values.at(static_cast<std::size_t>(k)); });
}

namespace {

int pair_index(int a, int b, int w) { return a * w - a * (a + 1) / 2 + (b - a - 1); }

ParamPoly to_param(const AlphaFraction& f) {
  auto p = f.as_poly();
  return p->to_param(alpha_alphabet());
}

std::string render_row(const SparseRow& r, const std::vector<std::string>& names, int shift) {
  if (r.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : r) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string(alpha_alphabet()) + ")*" + names.at(static_cast<std::size_t>(k - shift));
  }
  return s;
}

Check antisymmetry_check(const StructTable& t) {
  const std::string name = "antisymmetry of the extracted bracket";
  for (int i = 0; i < t.dim(); ++i) {
    if (!t.basis_bracket(i, i).is_zero()) {
      return Check::fail(name, Locator{"[" + t.basis()[i] + "," + t.basis()[i] + "]", {}, t.render(t.basis_bracket(i, i))});
    }
    for (int j = i + 1; j < t.dim(); ++j) {
      AWElement s = t.basis_bracket(i, j) + t.basis_bracket(j, i);
      if (!s.is_zero()) {
        return Check::fail(name, Locator{"[" + t.basis()[i] + "," + t.basis()[j] + "]", {}, t.render(s)});
      }
    }
  }
  return Check::pass(name);
}

Check word_definition_check(const StructTable& t) {
  const std::string name = "defining words agree with the extracted bracket";
  int checked = 0;
  std::map<std::string, int> index;
  for (int k = 0; k < t.dim(); ++k) {
    if (t.words()[static_cast<std::size_t>(k)]) index.emplace(t.words()[static_cast<std::size_t>(k)]->to_string(), k);
  }
  for (int k = 0; k < t.dim(); ++k) {
    const auto& w = t.words()[static_cast<std::size_t>(k)];
    if (!w || w->is_generator()) continue;
    auto l = index.find(w->left().to_string());
    auto r = index.find(w->right().to_string());
    if (l == index.end() || r == index.end()) continue;
    ++checked;
    AWElement d = t.basis_bracket(l->second, r->second) - AWElement(k);
    if (!d.is_zero()) return Check::fail(name, Locator{t.basis()[static_cast<std::size_t>(k)] + " = " + w->to_string(), {}, t.render(d)});
  }
  return Check::pass(name, std::to_string(checked) + " words whose factors are basis words");
}

}  // namespace

Extraction extract_structure_constants(int n, Convention convention) {
  Extraction out;
  out.ansatz = build_B_general(n, convention);
  const GeneralAnsatz& a = out.ansatz;
  const int w = static_cast<int>(a.words.size());
  const int pairs = w * (w - 1) / 2;
  Report& rep = out.report;
  rep.command = "extract aw";
  rep.params = {{"n", std::to_string(n)},
                {"convention", to_string(convention)},
                {"words", std::to_string(w)},
                {"unknowns", std::to_string(pairs)}};

  AWMatrix shifted = remap(a.b, [pairs](int k) { return AWElement(pairs + k); });
  auto bracket = [pairs, w](const AWElement& p, const AWElement& q) {
    return bilinear_extend(p, q, [pairs, w](int ka, int kb) {
      const int x = ka - pairs;
      const int y = kb - pairs;
      if (x == y) return AWElement();
      return x < y ? AWElement(pair_index(x, y, w)) : AWElement(pair_index(y, x, w), ParamPoly(-1));
    });
  };
  LieMatrix<AWElement> residual = aw_reflection_residual(shifted, bracket);

  LinearSystem sys;
  sys.unknowns = pairs;
  for (const auto& [key, series] : residual.entries()) {
    for (const auto& [mono, coeff] : series.terms()) {
      SparseRow row;
      for (const auto& [k, c] : coeff.terms()) {
        AlphaFraction f(AlphaPoly::from(c));
        row.emplace(k, k < pairs ? f : -f);
      }
      sys.rows.push_back(std::move(row));
    }
  }
  const std::size_t raw_rows = sys.rows.size();
  LinearSolution sol = solve(std::move(sys));
  rep.params.emplace_back("equations", std::to_string(raw_rows));

  std::vector<std::string> pair_names;
  pair_names.reserve(static_cast<std::size_t>(pairs));
  for (int x = 0; x < w; ++x) {
    for (int y = x + 1; y < w; ++y) pair_names.push_back("[" + a.names[x] + "," + a.names[y] + "]");
  }
  std::vector<std::string> combined = pair_names;
  combined.insert(combined.end(), a.names.begin(), a.names.end());

  if (!sol.consistent()) {
    rep.add(Check::fail("reflection system is consistent",
                        Locator{"reduced equation", {}, "0 = " + render_row(sol.inconsistent.front(), combined, 0)},
                        std::to_string(sol.inconsistent.size()) + " irreducible equations"));
    return out;
  }
  rep.add(Check::pass("reflection system is consistent",
                      std::to_string(sol.equations) + " distinct equations in " + std::to_string(pairs) + " unknowns"));
  if (sol.unique()) {
    rep.add(Check::pass("all word-pair brackets are determined"));
  } else {
    std::string free;
    for (std::size_t i = 0; i < sol.free_unknowns.size() && i < 8; ++i) {
      free += (i ? " " : "") + pair_names[static_cast<std::size_t>(sol.free_unknowns[i])];
    }
    rep.add(Check::fail("all word-pair brackets are determined", Locator{"free unknowns", {}, free},
                        std::to_string(sol.free_unknowns.size()) + " free, set to zero"));
  }

  for (const auto& [u, value] : sol.values) {
    for (const auto& [k, c] : value) {
      if (!c.as_poly()) {
        rep.add(Check::fail("bracket coefficients are polynomial in alpha",
                            Locator{pair_names[static_cast<std::size_t>(u)], {}, render_row(value, a.names, 0)}));
        return out;
      }
    }
  }
  rep.add(Check::pass("bracket coefficients are polynomial in alpha"));

  StructTable t("AW" + std::to_string(n) + "-extracted", a.names, alpha_alphabet());
  std::vector<int> gens;
  for (int i = 0; i < n; ++i) gens.push_back(i);
  t.set_generators(gens);
  for (int k = 0; k < w; ++k) t.set_word(k, a.words[static_cast<std::size_t>(k)]);
  for (int x = 0; x < w; ++x) {
    for (int y = x + 1; y < w; ++y) {
      auto it = sol.values.find(pair_index(x, y, w));
      if (it == sol.values.end()) continue;
      AWElement v;
      for (const auto& [k, c] : it->second) v.add_term(k, to_param(c));
      t.set_bracket(x, y, v);
    }
  }

  rep.add(antisymmetry_check(t));
  rep.add(check_jacobi(t));
  rep.add(word_definition_check(t));
  AWMatrix self = a.b;
  auto refl = check_reflection_aw(t, self);
  rep.add(combine("reflection relation re-checked on the extracted table", refl));
  rep.add(Check::pass("brackets close on the span of the ansatz words",
                      "every solved bracket is a combination of the " + std::to_string(w) + " words"));
  out.table = std::move(t);
  return out;
}

StructTable rescale_basis(const StructTable& t, int index, const Rational& factor) {
  if (factor == 0) throw ConfigurationError("basis rescaling needs a nonzero factor");
  const Rational inv = Rational(1) / factor;
  auto convert = [&](const AWElement& e) {
    AWElement r;
    for (const auto& [k, c] : e.terms()) r.add_term(k, k == index ? c.scaled_by(inv) : c);
    return r;
  };
  StructTable out(t.name(), t.basis(), t.params());
  out.set_generators(t.generators());
  for (int k = 0; k < t.dim(); ++k) {
    if (t.words()[static_cast<std::size_t>(k)]) out.set_word(k, *t.words()[static_cast<std::size_t>(k)]);
  }
  for (const auto& [name, v] : t.dependents()) out.define_dependent(name, convert(v));
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = i + 1; j < t.dim(); ++j) {
      Rational s(1);
      if (i == index) s *= factor;
      if (j == index) s *= factor;
      out.set_bracket(i, j, convert(t.basis_bracket(i, j).scaled_by(s)));
    }
  }
  return out;
}

namespace {

struct Attempt {
  std::optional<Locator> obstruction;
  std::vector<AWElement> images;
};

Attempt try_signs(const StructTable& a, const StructTable& b, const std::vector<int>& signs) {
  Attempt at;
  const std::size_t n = a.generators().size();
  std::vector<AWElement> gen_images;
  for (std::size_t i = 0; i < n; ++i) gen_images.emplace_back(b.generators()[i], ParamPoly(signs[i]));
  for (int u = 0; u < a.dim(); ++u) {
    const auto& w = a.words()[static_cast<std::size_t>(u)];
    const std::string name = a.basis()[static_cast<std::size_t>(u)];
    if (!w) {
      at.obstruction = Locator{name, {}, "no defining word"};
      return at;
    }
    AWElement self = eval_word(*w, a);
    if (self.size() != 1 || self.terms().begin()->first != u || !self.terms().begin()->second.is_constant()) {
      at.obstruction = Locator{name + " = " + w->to_string(), {}, "word evaluates to " + a.render(self)};
      return at;
    }
    const Rational kappa = *self.terms().begin()->second.as_constant();
    at.images.push_back(eval_word(*w, b, gen_images).scaled_by(Rational(1) / kappa));
  }
  std::vector<SparseRow> rows;
  for (const auto& e : at.images) {
    SparseRow r;
    for (const auto& [k, c] : e.terms()) r.emplace(k, AlphaFraction(AlphaPoly::from(c)));
    rows.push_back(std::move(r));
  }
  if (rank(rows) != b.dim()) {
    at.obstruction = Locator{"basis images", {}, "not linearly independent"};
    return at;
  }
  auto phi = [&](const AWElement& e) {
    return e.map_linear<AWElement>([&](int k) { return at.images[static_cast<std::size_t>(k)]; });
  };
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      AWElement d = phi(a.basis_bracket(i, j)) - b.bracket(at.images[i], at.images[j]);
      if (!d.is_zero()) {
        at.obstruction = Locator{"[" + a.basis()[i] + "," + a.basis()[j] + "]", {}, b.render(d)};
        return at;
      }
    }
  }
  return at;
}

}  // namespace

TableMatch match_tables(const StructTable& a, const StructTable& b) {
  TableMatch m;
  const std::string name = "graded isomorphism " + a.name() + " -> " + b.name();
  const std::size_t n = a.generators().size();
  if (a.dim() != b.dim() || n != b.generators().size()) {
    m.check = Check::fail(name, Locator{"shape", {}, "dimensions or generator counts differ"});
    return m;
  }
  std::optional<Locator> first;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
    Attempt at = try_signs(a, b, signs);
    if (!at.obstruction) {
      m.found = true;
      m.signs = signs;
      std::string note = "e_i -> s_i e_i with s = (";
      for (std::size_t i = 0; i < n; ++i) note += (i ? "," : "") + std::string(signs[i] > 0 ? "+" : "-");
      note += ")";
      for (int u = 0; u < a.dim(); ++u) m.images.push_back(b.render(at.images[static_cast<std::size_t>(u)]));
      m.check = Check::pass(name, note);
      return m;
    }
    if (!first) first = at.obstruction;
  }
  m.check = Check::fail(name, *first, "no sign choice works; obstruction shown for all signs +");
  return m;
}

std::optional<Convention> select_convention(int n) {
  if (n != 3 && n != 4) return std::nullopt;
  StructTable t = n == 3 ? aw3_table() : aw4_table();
  const AWMatrix target = build_B_aw(n, t);
  for (Convention c : {Convention::Literal, Convention::NoOuterSign}) {
    AWMatrix s = specialize_ansatz(build_B_general(n, c), t);
    if (s.numerator == target.numerator && s.denominator == target.denominator) return c;
  }
  return std::nullopt;
}

Report extraction_report(int n, std::optional<Convention> convention, std::optional<StructTable>* table_out) {
  const auto start = std::chrono::steady_clock::now();
  Report pre;
  std::optional<Convention> sel3 = select_convention(3);
  std::optional<Convention> sel4 = select_convention(4);
  for (auto [k, sel] : {std::pair{3, sel3}, std::pair{4, sel4}}) {
    const std::string name = "ansatz reproduces the explicit N=" + std::to_string(k) + " matrix";
    if (sel) {
      pre.add(Check::pass(name, "convention " + to_string(*sel)));
    } else {
      pre.add(Check::fail(name, Locator{"convention", {}, "none of the conventions matches"}));
    }
  }
  Convention use = convention.value_or(sel3 && sel4 && *sel3 == *sel4 ? *sel3 : Convention::Literal);
  Extraction ex = extract_structure_constants(n, use);
  Report rep = ex.report;
  rep.params.emplace_back("convention-source", convention ? "flag" : "selected by the N=3,4 matrices");
  std::vector<Check> checks = pre.checks;
  checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
  rep.checks = checks;
  if (ex.table && (n == 3 || n == 4)) {
    StructTable reference = n == 3 ? aw3_table() : aw4_table();
    TableMatch m = match_tables(reference, *ex.table);
    rep.add(m.check);
  }
  if (table_out) *table_out = ex.table;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace slnaw::aw
