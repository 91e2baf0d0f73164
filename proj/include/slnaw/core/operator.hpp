#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slnaw/exactnum/errors.hpp"

namespace slnaw {

/// Multi-index of one side (row or column) of a k-leg operator, 0-based.
using LegIndex = std::vector<int>;

/// Sparse square matrix acting on (C^N)^{⊗k}. Flat indices put leg 1 in the
/// most significant position, so E_ab ⊗ E_cd sits at row (a,c), column (b,d).
/// Entries of type T need is_zero(), +=, -= and unary minus.
template <class T>
class Operator {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using Entries = std::map<Key, T>;

  Operator() = default;
  Operator(int dim, int legs) : dim_(dim), legs_(legs) {
    if (dim < 1 || legs < 1) throw ConfigurationError("operator needs dim >= 1 and legs >= 1");
    size_ = 1;
    for (int i = 0; i < legs; ++i) size_ *= static_cast<std::uint32_t>(dim);
  }

  int dim() const { return dim_; }
  int legs() const { return legs_; }
  std::uint32_t size() const { return size_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  std::uint32_t flatten(const LegIndex& idx) const {
    if (static_cast<int>(idx.size()) != legs_) throw IndexError("multi-index has wrong number of legs");
    std::uint32_t r = 0;
    for (int a : idx) {
      if (a < 0 || a >= dim_) throw IndexError("leg index out of range");
      r = r * static_cast<std::uint32_t>(dim_) + static_cast<std::uint32_t>(a);
    }
    return r;
  }
  LegIndex unflatten(std::uint32_t flat) const {
    LegIndex idx(static_cast<std::size_t>(legs_));
    for (int l = legs_ - 1; l >= 0; --l) {
      idx[static_cast<std::size_t>(l)] = static_cast<int>(flat % static_cast<std::uint32_t>(dim_));
      flat /= static_cast<std::uint32_t>(dim_);
    }
    return idx;
  }

  T at(std::uint32_t r, std::uint32_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? T{} : it->second;
  }
  T at(const LegIndex& r, const LegIndex& c) const { return at(flatten(r), flatten(c)); }

  void add(std::uint32_t r, std::uint32_t c, const T& v) {
    if (r >= size_ || c >= size_) throw IndexError("operator entry out of range");
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  void add(const LegIndex& r, const LegIndex& c, const T& v) { add(flatten(r), flatten(c), v); }

  Operator& operator+=(const Operator& o) {
    check_shape(o);
    for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
    return *this;
  }
  Operator& operator-=(const Operator& o) {
    check_shape(o);
    for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
    return *this;
  }
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  Operator operator-() const {
    Operator r(dim_, legs_);
    for (const auto& [k, v] : entries_) r.entries_.emplace(k, -v);
    return r;
  }
  friend bool operator==(const Operator& a, const Operator& b) {
    return a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.entries_ == b.entries_;
  }

  /// Applies `f` to every entry (zero results dropped).
  template <class U, class F>
  Operator<U> map(F&& f) const {
    Operator<U> r(dim_, legs_);
    for (const auto& [k, v] : entries_) r.add(k.first, k.second, f(v));
    return r;
  }

  /// Places this k-leg operator on legs `placement` (1-based, distinct, in
  /// source-leg order) of an m-leg space with identity on the other legs.
  Operator embed_legs(const std::vector<int>& placement, int total) const {
    if (static_cast<int>(placement.size()) != legs_) throw ConfigurationError("placement size must equal leg count");
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    for (int p : placement) {
      if (p < 1 || p > total) throw IndexError("placement leg out of range");
      if (used[static_cast<std::size_t>(p - 1)]) throw ConfigurationError("duplicate leg in placement");
      used[static_cast<std::size_t>(p - 1)] = true;
    }
    std::vector<int> free_legs;
    for (int l = 0; l < total; ++l) {
      if (!used[static_cast<std::size_t>(l)]) free_legs.push_back(l);
    }
    Operator r(dim_, total);
    std::uint32_t free_count = 1;
    for (std::size_t i = 0; i < free_legs.size(); ++i) free_count *= static_cast<std::uint32_t>(dim_);
    for (const auto& [k, v] : entries_) {
      LegIndex ri = unflatten(k.first);
      LegIndex ci = unflatten(k.second);
      LegIndex row(static_cast<std::size_t>(total));
      LegIndex col(static_cast<std::size_t>(total));
      for (std::size_t l = 0; l < placement.size(); ++l) {
        row[static_cast<std::size_t>(placement[l] - 1)] = ri[l];
        col[static_cast<std::size_t>(placement[l] - 1)] = ci[l];
      }
      for (std::uint32_t f = 0; f < free_count; ++f) {
        std::uint32_t rest = f;
        for (auto it = free_legs.rbegin(); it != free_legs.rend(); ++it) {
          int a = static_cast<int>(rest % static_cast<std::uint32_t>(dim_));
          rest /= static_cast<std::uint32_t>(dim_);
          row[static_cast<std::size_t>(*it)] = a;
          col[static_cast<std::size_t>(*it)] = a;
        }
        r.add(r.flatten(row), r.flatten(col), v);
      }
    }
    return r;
  }

  /// Transpose in leg `leg` (1-based) only.
  Operator transpose_leg(int leg) const {
    check_leg(leg);
    Operator r(dim_, legs_);
    for (const auto& [k, v] : entries_) {
      LegIndex ri = unflatten(k.first);
      LegIndex ci = unflatten(k.second);
      std::swap(ri[static_cast<std::size_t>(leg - 1)], ci[static_cast<std::size_t>(leg - 1)]);
      r.add(flatten(ri), flatten(ci), v);
    }
    return r;
  }

  /// Full transpose.
  Operator transposed() const {
    Operator r(dim_, legs_);
    for (const auto& [k, v] : entries_) r.add(k.second, k.first, v);
    return r;
  }

  /// Partial trace over leg `leg` (1-based); the result has one leg fewer.
  Operator partial_trace(int leg) const {
    check_leg(leg);
    if (legs_ == 1) throw ConfigurationError("partial trace of a one-leg operator; use trace()");
    Operator r(dim_, legs_ - 1);
    for (const auto& [k, v] : entries_) {
      LegIndex ri = unflatten(k.first);
      LegIndex ci = unflatten(k.second);
      if (ri[static_cast<std::size_t>(leg - 1)] != ci[static_cast<std::size_t>(leg - 1)]) continue;
      ri.erase(ri.begin() + (leg - 1));
      ci.erase(ci.begin() + (leg - 1));
      r.add(r.flatten(ri), r.flatten(ci), v);
    }
    return r;
  }

  T trace() const {
    T t{};
    for (const auto& [k, v] : entries_) {
      if (k.first == k.second) t += v;
    }
    return t;
  }

  void check_shape(const Operator& o) const {
    if (o.dim_ != dim_ || o.legs_ != legs_) throw ConfigurationError("operator shape mismatch");
  }

 private:
  void check_leg(int leg) const {
    if (leg < 1 || leg > legs_) throw IndexError("leg " + std::to_string(leg) + " out of range");
  }

  int dim_ = 0;
  int legs_ = 0;
  std::uint32_t size_ = 0;
  Entries entries_;
};

/// Matrix product with a caller-supplied entry product, so that scalar and
/// Lie-valued operators can be combined (A is m-valued, B is n-valued).
template <class R, class A, class B, class F>
Operator<R> multiply(const Operator<A>& a, const Operator<B>& b, F&& product) {
  if (a.dim() != b.dim() || a.legs() != b.legs()) throw ConfigurationError("operator shape mismatch");
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, const B*>>> rows;
  for (const auto& [k, v] : b.entries()) rows[k.first].emplace_back(k.second, &v);
  Operator<R> r(a.dim(), a.legs());
  for (const auto& [k, v] : a.entries()) {
    auto it = rows.find(k.second);
    if (it == rows.end()) continue;
    for (const auto& [col, bv] : it->second) r.add(k.first, col, product(v, *bv));
  }
  return r;
}

/// Identity operator with entries T(1).
template <class T>
Operator<T> identity_operator(int dim, int legs, const T& one) {
  Operator<T> r(dim, legs);
  for (std::uint32_t i = 0; i < r.size(); ++i) r.add(i, i, one);
  return r;
}

/// "(a,b;c,d)"-style 1-based rendering of an entry position.
inline std::string entry_locator(int dim, int legs, std::uint32_t row, std::uint32_t col) {
  auto render = [&](std::uint32_t flat) {
    std::vector<int> idx(static_cast<std::size_t>(legs));
    for (int l = legs - 1; l >= 0; --l) {
      idx[static_cast<std::size_t>(l)] = static_cast<int>(flat % static_cast<std::uint32_t>(dim)) + 1;
      flat /= static_cast<std::uint32_t>(dim);
    }
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s;
  };
  return "(" + render(row) + ";" + render(col) + ")";
}

}  // namespace slnaw
