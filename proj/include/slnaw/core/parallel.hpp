#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace slnaw {

/// Process-wide switch; the CLI's --parallel off clears it.
void set_parallel(bool on);
bool parallel_enabled();

/// Evaluates f(0..count-1) and returns the result of the smallest index for
/// which f returns a value. The answer does not depend on scheduling: the
/// parallel path evaluates every index and reduces in index order, the serial
/// path stops at the first hit.
template <class F>
auto first_hit(std::size_t count, F&& f) -> decltype(f(std::size_t{})) {
  using R = decltype(f(std::size_t{}));
  const std::size_t workers =
      parallel_enabled() ? std::min<std::size_t>(count, std::max(2u, std::thread::hardware_concurrency())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (R r = f(i)) return r;
    }
    return R{};
  }
  std::vector<R> slots(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) slots[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& s : slots) {
    if (s) return std::move(s);
  }
  return R{};
}

/// out[i] = f(i), computed serially or by interleaved workers.
template <class T, class F>
std::vector<T> ordered_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  const std::size_t workers =
      parallel_enabled() ? std::min<std::size_t>(count, std::max(2u, std::thread::hardware_concurrency())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace slnaw
