#include "slnaw/aw/alpha_field.hpp"

#include <algorithm>

#include "slnaw/exactnum/errors.hpp"

namespace slnaw::aw {

AlphaPoly::AlphaPoly(long v) {
  if (v != 0) c_.push_back(Rational(v));
}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void AlphaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

AlphaPoly AlphaPoly::from(const ParamPoly& p) {
  std::vector<Rational> c;
  std::optional<std::size_t> var;
  for (const auto& [m, q] : p.terms()) {
    std::size_t k = 0;
    for (const auto& [v, e] : m.factors()) {
      if (var && *var != v) throw ConfigurationError("expected a polynomial in one parameter");
      var = v;
      k = e;
    }
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += q;
  }
  return AlphaPoly(std::move(c));
}

ParamPoly AlphaPoly::to_param(const Alphabet* alphabet) const {
  ParamPoly r;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (k == 0) {
      r += ParamPoly(c_[k]);
    } else {
      ParamPoly t(c_[k]);
      for (std::size_t i = 0; i < k; ++i) t *= ParamPoly::variable(alphabet, 0);
      r += t;
    }
  }
  return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) { return *this += -o; }

AlphaPoly AlphaPoly::operator-() const { return scaled(Rational(-1)); }

AlphaPoly AlphaPoly::scaled(const Rational& q) const {
  if (q == 0) return {};
  AlphaPoly r = *this;
  for (auto& v : r.c_) v *= q;
  return r;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return AlphaPoly(std::move(c));
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw ConfigurationError("division by the zero polynomial");
  AlphaPoly q;
  AlphaPoly r = a;
  std::vector<Rational> qc;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Rational f = r.lead() / b.lead();
    std::vector<Rational> t(static_cast<std::size_t>(shift) + 1, Rational(0));
    t.back() = f;
    AlphaPoly term(std::move(t));
    q += term;
    r -= term * b;
  }
  return {q, r};
}

AlphaPoly AlphaPoly::gcd(AlphaPoly a, AlphaPoly b) {
  while (!b.is_zero()) {
    AlphaPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.lead());
}

AlphaFraction::AlphaFraction(AlphaPoly num) : num_(std::move(num)), den_(1) {}

AlphaFraction::AlphaFraction(AlphaPoly num, AlphaPoly den) {
  if (den.is_zero()) throw ConfigurationError("zero denominator in Q(alpha)");
  if (num.is_zero()) {
    den_ = AlphaPoly(1);
    return;
  }
  AlphaPoly g = AlphaPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = AlphaPoly::divmod(num, g).first;
    den = AlphaPoly::divmod(den, g).first;
  }
  Rational lead = den.lead();
  num_ = num.scaled(Rational(1) / lead);
  den_ = den.scaled(Rational(1) / lead);
}

std::optional<AlphaPoly> AlphaFraction::as_poly() const {
  if (den_.degree() == 0) return num_;
  return std::nullopt;
}

AlphaFraction operator+(const AlphaFraction& a, const AlphaFraction& b) {
  if (a.den_ == b.den_) return AlphaFraction(a.num_ + b.num_, a.den_);
  return AlphaFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

AlphaFraction operator-(const AlphaFraction& a, const AlphaFraction& b) { return a + (-b); }

AlphaFraction operator*(const AlphaFraction& a, const AlphaFraction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return AlphaFraction(a.num_ * b.num_);
  return AlphaFraction(a.num_ * b.num_, a.den_ * b.den_);
}

AlphaFraction operator/(const AlphaFraction& a, const AlphaFraction& b) {
  if (b.is_zero()) throw ConfigurationError("division by zero in Q(alpha)");
  return AlphaFraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string AlphaFraction::to_string(const Alphabet* alphabet) const {
  std::string n = num_.to_param(alphabet).to_string();
  if (den_.degree() == 0) return n;
  return "(" + n + ")/(" + den_.to_param(alphabet).to_string() + ")";
}

namespace {

void axpy(SparseRow& row, const AlphaFraction& factor, const SparseRow& pivot) {
  for (const auto& [col, v] : pivot) {
    auto it = row.find(col);
    AlphaFraction nv = (it == row.end() ? AlphaFraction() : it->second) - factor * v;
    if (nv.is_zero()) {
      if (it != row.end()) row.erase(it);
    } else if (it == row.end()) {
      row.emplace(col, std::move(nv));
    } else {
      it->second = std::move(nv);
    }
  }
}

void normalize(SparseRow& row) {
  if (row.empty()) return;
  AlphaFraction lead = row.begin()->second;
  if (lead == AlphaFraction(1)) return;
  for (auto& [col, v] : row) v = v / lead;
}

/// Echelon reduction on columns < limit; returns pivot column -> row index.
std::map<int, std::size_t> reduce(std::vector<SparseRow>& rows, int limit) {
  std::map<int, std::size_t> pivots;
  std::vector<bool> used(rows.size(), false);
  // column -> rows containing it, refreshed lazily
  for (int col = 0; col < limit; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || !rows[r].count(col)) continue;
      if (!best || rows[r].size() < rows[*best].size()) best = r;
    }
    if (!best) continue;
    used[*best] = true;
    pivots[col] = *best;
    SparseRow& p = rows[*best];
    AlphaFraction inv = AlphaFraction(1) / p.at(col);
    for (auto& [c, v] : p) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == *best) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      AlphaFraction factor = it->second;
      axpy(rows[r], factor, p);
    }
  }
  return pivots;
}

std::vector<SparseRow> dedupe(std::vector<SparseRow> rows) {
  std::vector<SparseRow> out;
  std::map<std::string, bool> seen;
  for (auto& r : rows) {
    if (r.empty()) continue;
    normalize(r);
    std::string key;
    for (const auto& [c, v] : r) {
      key += std::to_string(c) + ":";
      for (const auto& q : v.num().coeffs()) key += q.get_str() + ",";
      key += "/";
      for (const auto& q : v.den().coeffs()) key += q.get_str() + ",";
      key += ";";
    }
    if (seen.emplace(key, true).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

LinearSolution solve(LinearSystem system) {
  LinearSolution sol;
  std::vector<SparseRow> rows = dedupe(std::move(system.rows));
  sol.equations = rows.size();
  auto pivots = reduce(rows, system.unknowns);
  std::vector<bool> pivot_row(rows.size(), false);
  for (const auto& [col, r] : pivots) pivot_row[r] = true;
  for (int u = 0; u < system.unknowns; ++u) {
    auto it = pivots.find(u);
    if (it == pivots.end()) {
      sol.free_unknowns.push_back(u);
      continue;
    }
    SparseRow value;
    for (const auto& [c, v] : rows[it->second]) {
      if (c >= system.unknowns) value.emplace(c - system.unknowns, v);
    }
    sol.values.emplace(u, std::move(value));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!pivot_row[r] && !rows[r].empty()) sol.inconsistent.push_back(rows[r]);
  }
  return sol;
}

int rank(std::vector<SparseRow> rows) {
  int limit = 0;
  for (const auto& r : rows) {
    if (!r.empty()) limit = std::max(limit, r.rbegin()->first + 1);
  }
  return static_cast<int>(reduce(rows, limit).size());
}

}  // namespace slnaw::aw
