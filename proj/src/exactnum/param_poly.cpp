#include "slnaw/exactnum/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "slnaw/exactnum/errors.hpp"

namespace slnaw {

ParamMonomial ParamMonomial::variable(std::size_t index, std::uint32_t exponent) {
  ParamMonomial m;
  if (exponent > 0) m.factors_.emplace_back(static_cast<std::uint16_t>(index), exponent);
  return m;
}

std::uint32_t ParamMonomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t ParamMonomial::exponent(std::size_t index) const {
  for (const auto& f : factors_) {
    if (f.first == index) return f.second;
  }
  return 0;
}

ParamMonomial ParamMonomial::multiply(const ParamMonomial& a, const ParamMonomial& b,
                                      const Alphabet* alphabet) {
  ParamMonomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto push = [&](std::uint16_t var, std::uint32_t e) {
    if (alphabet != nullptr && alphabet->involutive(var)) e %= 2;
    if (e > 0) r.factors_.emplace_back(var, e);
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      push(a.factors_[i].first, a.factors_[i].second);
      ++i;
    } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
      push(b.factors_[j].first, b.factors_[j].second);
      ++j;
    } else {
      push(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string ParamMonomial::to_string(const Alphabet* alphabet) const {
  std::string s;
  for (const auto& [var, e] : factors_) {
    if (!s.empty()) s += "*";
    s += alphabet != nullptr ? alphabet->name(var) : ("p" + std::to_string(var));
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

ParamPoly::ParamPoly(long value) {
  if (value != 0) terms_.emplace_back(ParamMonomial{}, Rational(value));
}

ParamPoly::ParamPoly(const Rational& value) {
  if (value != 0) terms_.emplace_back(ParamMonomial{}, value);
}

ParamPoly ParamPoly::variable(const Alphabet* alphabet, std::size_t index) {
  if (alphabet == nullptr || index >= alphabet->size()) throw IndexError("parameter index out of range");
  return term(alphabet, ParamMonomial::variable(index), Rational(1));
}

ParamPoly ParamPoly::variable(const Alphabet* alphabet, std::string_view name) {
  if (alphabet == nullptr) throw ConfigurationError("no parameter alphabet for '" + std::string(name) + "'");
  return variable(alphabet, alphabet->require(name));
}

ParamPoly ParamPoly::term(const Alphabet* alphabet, ParamMonomial m, Rational c) {
  ParamPoly p;
  if (c == 0) return p;
  if (!m.is_one()) {
    if (alphabet == nullptr) throw ConfigurationError("non-constant term without alphabet");
    p.alphabet_ = alphabet;
  }
  p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

std::optional<Rational> ParamPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first.is_one()) return terms_[0].second;
  return std::nullopt;
}

std::uint32_t ParamPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

std::uint32_t ParamPoly::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(index));
  return d;
}

void ParamPoly::merge(const ParamPoly& other, int sign) {
  if (other.terms_.empty()) return;
  alphabet_ = unify(alphabet_, other.alphabet_);
  if (terms_.empty()) {
    terms_ = other.terms_;
    if (sign < 0) {
      for (auto& t : terms_) t.second = -t.second;
    }
    return;
  }
  // Fast path for the ubiquitous constant + constant case.
  if (terms_.size() == 1 && other.terms_.size() == 1 && terms_[0].first == other.terms_[0].first) {
    if (sign > 0) {
      terms_[0].second += other.terms_[0].second;
    } else {
      terms_[0].second -= other.terms_[0].second;
    }
    if (terms_[0].second == 0) terms_.clear();
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
      out.emplace_back(other.terms_[j].first, sign > 0 ? other.terms_[j].second : Rational(-other.terms_[j].second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(terms_[i].second + other.terms_[j].second)
                            : Rational(terms_[i].second - other.terms_[j].second);
      if (c != 0) out.emplace_back(std::move(terms_[i].first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  merge(other, +1);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  merge(other, -1);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly ParamPoly::scaled_by(const Rational& q) const {
  ParamPoly r;
  if (q == 0) return r;
  r = *this;
  for (auto& t : r.terms_) t.second *= q;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.alphabet_ = unify(a.alphabet_, b.alphabet_);
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Rational c = a.terms_[0].second * b.terms_[0].second;
    r.terms_.emplace_back(ParamMonomial::multiply(a.terms_[0].first, b.terms_[0].first, r.alphabet_), std::move(c));
    return r;
  }
  std::map<ParamMonomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      acc[ParamMonomial::multiply(ma, mb, r.alphabet_)] += ca * cb;
    }
  }
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  }
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  if (!a.terms_.empty() && !(a.terms_.size() == 1 && a.terms_[0].first.is_one())) {
    // Non-constant polynomials must also live over the same alphabet.
    return a.alphabet_ == b.alphabet_;
  }
  return true;
}

std::strong_ordering compare(const ParamPoly& a, const ParamPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    int q = cmp(a.terms_[i].second, b.terms_[i].second);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

// Graded lexicographic comparison on dense exponents; a genuine monomial order.
bool grlex_less(const ParamMonomial& a, const ParamMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    std::uint16_t va = i < fa.size() ? fa[i].first : 0xffff;
    std::uint16_t vb = j < fb.size() ? fb[j].first : 0xffff;
    std::uint16_t v = std::min(va, vb);
    std::uint32_t ea = (va == v) ? fa[i].second : 0;
    std::uint32_t eb = (vb == v) ? fb[j].second : 0;
    if (ea != eb) return ea < eb;
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return false;
}

std::optional<ParamMonomial> monomial_quotient(const ParamMonomial& a, const ParamMonomial& b) {
  std::vector<ParamMonomial::Factor> out;
  ParamMonomial q;
  for (const auto& [v, e] : b.factors()) {
    if (a.exponent(v) < e) return std::nullopt;
  }
  for (const auto& [v, e] : a.factors()) {
    std::uint32_t r = e - b.exponent(v);
    if (r > 0) q = ParamMonomial::multiply(q, ParamMonomial::variable(v, r), nullptr);
  }
  return q;
}

const ParamPoly::Term& leading(const ParamPoly& p) {
  const auto& t = p.terms();
  const ParamPoly::Term* best = &t.front();
  for (const auto& term : t) {
    if (grlex_less(best->first, term.first)) best = &term;
  }
  return *best;
}

}  // namespace

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const Alphabet* alpha = unify(alphabet_, divisor.alphabet_);
  if (alpha != nullptr) {
    for (const auto& v : alpha->variables()) {
      if (v.involutive) throw UnsupportedError("exact division with involutive parameters");
    }
  }
  if (auto c = divisor.as_constant()) {
    ParamPoly q = *this;
    for (auto& t : q.terms_) t.second /= *c;
    return q;
  }
  ParamPoly remainder = *this;
  ParamPoly quotient;
  const auto& lead_d = leading(divisor);
  while (!remainder.is_zero()) {
    const auto& lead_r = leading(remainder);
    auto m = monomial_quotient(lead_r.first, lead_d.first);
    if (!m) return std::nullopt;
    ParamPoly step = term(alpha, *m, lead_r.second / lead_d.second);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string piece;
    if (m.is_one()) {
      piece = c.get_str();
    } else if (c == 1) {
      piece = m.to_string(alphabet_);
    } else if (c == -1) {
      piece = "-" + m.to_string(alphabet_);
    } else {
      piece = c.get_str() + "*" + m.to_string(alphabet_);
    }
    if (first) {
      s = piece;
      first = false;
    } else if (piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

ParamPoly ParamPoly::parse(std::string_view text, const Alphabet* alphabet) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw ParseError("empty polynomial");
  ParamPoly result;
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in polynomial: " + t);
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string_view body(t.data() + pos, end - pos);
    if (body.empty()) throw ParseError("empty term in polynomial: " + t);
    ParamPoly term_value(sign);
    std::size_t fpos = 0;
    while (fpos <= body.size()) {
      std::size_t fend = body.find('*', fpos);
      if (fend == std::string_view::npos) fend = body.size();
      std::string_view factor = body.substr(fpos, fend - fpos);
      if (factor.empty()) throw ParseError("empty factor in polynomial: " + t);
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        term_value *= ParamPoly(parse_rational(factor));
      } else {
        std::string_view name = factor;
        std::uint32_t e = 1;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
          name = factor.substr(0, caret);
          e = static_cast<std::uint32_t>(std::stoul(std::string(factor.substr(caret + 1))));
        }
        if (alphabet == nullptr) throw ConfigurationError("parameter '" + std::string(name) + "' without alphabet");
        ParamPoly v = term(alphabet, ParamMonomial::variable(alphabet->require(name), e), Rational(1));
        term_value *= v;
      }
      fpos = fend + 1;
    }
    result += term_value;
    pos = end;
  }
  return result;
}

}  // namespace slnaw
