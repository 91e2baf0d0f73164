#include "slnaw/rmatrix/tensor_operator.hpp"

#include <algorithm>

namespace slnaw::rmatrix {

namespace {

ScalarOperator scale_entries(const ScalarOperator& op, const SpectralLaurent& s) {
  return op.map<SpectralLaurent>([&](const SpectralLaurent& v) { return s * v; });
}

SpectralLaurent power(const SpectralLaurent& p, int m) {
  SpectralLaurent r = spectral_constant(ParamPoly(1));
  for (int i = 0; i < m; ++i) r = r * p;
  return r;
}

}  // namespace

std::pair<SpectralLaurent, SpectralLaurent> Denominator::normalize(const SpectralLaurent& f) {
  if (f.is_zero()) throw std::domain_error("zero denominator factor");
  SpectralExponents shift{};
  for (std::size_t v = 0; v < kMaxSpectral; ++v) shift[v] = -f.min_degree(v);
  SpectralLaurent g = f.shifted(shift);
  SpectralLaurent multiplier = spectral_monomial(f.vars(), shift);
  const ParamPoly& lead = g.terms().rbegin()->second;
  if (auto c = lead.as_constant()) {
    Rational inv = 1 / *c;
    g = g.scaled(ParamPoly(inv));
    multiplier = multiplier.scaled(ParamPoly(inv));
  }
  if (g.terms().size() == 1 && g.terms().begin()->second.is_constant()) {
    // g is exactly 1 here.
    return {SpectralLaurent(f.vars()), multiplier};
  }
  return {g, multiplier};
}

void Denominator::multiply(const SpectralLaurent& g, int m) {
  if (g.is_zero() || m == 0) return;
  std::string key = slnaw::to_string(g);
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const Factor& f, const std::string& k) { return f.key < k; });
  if (it != factors_.end() && it->key == key) {
    it->multiplicity += m;
  } else {
    factors_.insert(it, Factor{g, std::move(key), m});
  }
}

void Denominator::multiply(const Denominator& other) {
  for (const auto& f : other.factors_) multiply(f.poly, f.multiplicity);
}

SpectralLaurent Denominator::expand() const {
  SpectralLaurent r = spectral_constant(ParamPoly(1));
  for (const auto& f : factors_) r = r * power(f.poly, f.multiplicity);
  return r;
}

Denominator Denominator::lcm(const Denominator& a, const Denominator& b, SpectralLaurent& extra_a,
                             SpectralLaurent& extra_b) {
  Denominator out;
  extra_a = spectral_constant(ParamPoly(1));
  extra_b = spectral_constant(ParamPoly(1));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].key < b.factors_[j].key)) {
      out.factors_.push_back(a.factors_[i]);
      extra_b = extra_b * power(a.factors_[i].poly, a.factors_[i].multiplicity);
      ++i;
    } else if (i == a.factors_.size() || b.factors_[j].key < a.factors_[i].key) {
      out.factors_.push_back(b.factors_[j]);
      extra_a = extra_a * power(b.factors_[j].poly, b.factors_[j].multiplicity);
      ++j;
    } else {
      const int ma = a.factors_[i].multiplicity;
      const int mb = b.factors_[j].multiplicity;
      out.factors_.push_back(ma >= mb ? a.factors_[i] : b.factors_[j]);
      if (ma > mb) extra_b = extra_b * power(a.factors_[i].poly, ma - mb);
      if (mb > ma) extra_a = extra_a * power(a.factors_[i].poly, mb - ma);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Denominator::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "*";
    s += "(" + f.key + ")";
    if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

bool operator==(const Denominator& a, const Denominator& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i].key != b.factors_[i].key || a.factors_[i].multiplicity != b.factors_[i].multiplicity) {
      return false;
    }
  }
  return true;
}

TensorOperator TensorOperator::scalar_times(const ScalarOperator& matrix, const SpectralLaurent& p,
                                            const std::vector<SpectralLaurent>& den_factors) {
  TensorOperator r(scale_entries(matrix, p));
  for (const auto& f : den_factors) r = r.divided_by(f);
  return r;
}

TensorOperator TensorOperator::divided_by(const SpectralLaurent& f) const {
  auto [g, multiplier] = Denominator::normalize(f);
  Denominator den = den_;
  den.multiply(g);
  return TensorOperator(scale_entries(num_, multiplier), std::move(den));
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  if (num_.dim() == 0) {
    *this = o;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  SpectralLaurent ea;
  SpectralLaurent eb;
  Denominator den = Denominator::lcm(den_, o.den_, ea, eb);
  num_ = scale_entries(num_, ea) + scale_entries(o.num_, eb);
  den_ = std::move(den);
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) { return *this += -o; }

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  Denominator den = a.den_;
  den.multiply(b.den_);
  ScalarOperator num = multiply<SpectralLaurent>(
      a.num_, b.num_, [](const SpectralLaurent& x, const SpectralLaurent& y) { return x * y; });
  return TensorOperator(std::move(num), std::move(den));
}

TensorOperator TensorOperator::scaled(const SpectralLaurent& s) const {
  return TensorOperator(scale_entries(num_, s), den_);
}

TensorOperator TensorOperator::substitute(std::size_t v, int sign, const SpectralExponents& image) const {
  ScalarOperator num =
      num_.map<SpectralLaurent>([&](const SpectralLaurent& p) { return p.substitute(v, sign, image); });
  Denominator den;
  for (const auto& f : den_.factors()) {
    auto [g, multiplier] = Denominator::normalize(f.poly.substitute(v, sign, image));
    num = scale_entries(num, power(multiplier, f.multiplicity));
    den.multiply(g, f.multiplicity);
  }
  return TensorOperator(std::move(num), std::move(den));
}

TensorOperator TensorOperator::specialize(std::size_t v, int value) const {
  ScalarOperator num = num_.map<SpectralLaurent>([&](const SpectralLaurent& p) { return p.specialize(v, value); });
  Denominator den;
  for (const auto& f : den_.factors()) {
    auto [g, multiplier] = Denominator::normalize(f.poly.specialize(v, value));
    num = scale_entries(num, power(multiplier, f.multiplicity));
    den.multiply(g, f.multiplicity);
  }
  return TensorOperator(std::move(num), std::move(den));
}

TensorOperator TensorOperator::rename_into(const Alphabet* target, const std::vector<std::size_t>& mapping) const {
  ScalarOperator num =
      num_.map<SpectralLaurent>([&](const SpectralLaurent& p) { return p.rename_into(target, mapping); });
  Denominator den;
  for (const auto& f : den_.factors()) {
    auto [g, multiplier] = Denominator::normalize(f.poly.rename_into(target, mapping));
    num = scale_entries(num, power(multiplier, f.multiplicity));
    den.multiply(g, f.multiplicity);
  }
  return TensorOperator(std::move(num), std::move(den));
}

TensorOperator TensorOperator::derivative(std::size_t v) const {
  // (N/D)' with D = prod f^m:  (N' P - N sum_f m f' P/f) / (D P),  P = prod f.
  SpectralLaurent p = spectral_constant(ParamPoly(1));
  for (const auto& f : den_.factors()) p = p * f.poly;
  SpectralLaurent log_part(p.vars());
  for (std::size_t k = 0; k < den_.factors().size(); ++k) {
    const auto& f = den_.factors()[k];
    SpectralLaurent term = f.poly.derivative(v).scaled(ParamPoly(f.multiplicity));
    for (std::size_t l = 0; l < den_.factors().size(); ++l) {
      if (l != k) term = term * den_.factors()[l].poly;
    }
    log_part += term;
  }
  ScalarOperator num = scale_entries(num_.map<SpectralLaurent>([&](const SpectralLaurent& q) { return q.derivative(v); }), p) -
                       scale_entries(num_, log_part);
  Denominator den = den_;
  for (const auto& f : den_.factors()) den.multiply(f.poly, 1);
  return TensorOperator(std::move(num), std::move(den));
}

RationalFn TensorOperator::entry(std::uint32_t row, std::uint32_t col) const {
  return RationalFn(num_.at(row, col), den_.expand());
}

std::optional<Locator> TensorOperator::first_nonzero() const {
  if (num_.entries().empty()) return std::nullopt;
  const auto& [key, value] = *num_.entries().begin();
  const auto& [mono, coeff] = *value.terms().begin();
  return Locator{entry_locator(num_.dim(), num_.legs(), key.first, key.second), monomial_locator(value.vars(), mono),
                 coeff.to_string()};
}

ScalarOperator matrix_unit(int n, int a, int b, const ParamPoly& c) {
  ScalarOperator r(n, 1);
  r.add(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1), spectral_constant(c));
  return r;
}

ScalarOperator kron(const ScalarOperator& a, const ScalarOperator& b) {
  if (a.dim() != b.dim()) throw ConfigurationError("kron of operators with different dimensions");
  ScalarOperator r(a.dim(), a.legs() + b.legs());
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      r.add(ka.first * b.size() + kb.first, ka.second * b.size() + kb.second, va * vb);
    }
  }
  return r;
}

Check zero_check(std::string name, const TensorOperator& residual, std::string note) {
  if (auto loc = residual.first_nonzero()) return Check::fail(std::move(name), *loc, std::move(note));
  return Check::pass(std::move(name), std::move(note));
}

}  // namespace slnaw::rmatrix
