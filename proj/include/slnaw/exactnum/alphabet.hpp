#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slnaw {

struct Variable {
  std::string name;
  /// Variables with v^2 = 1 (the sign parameter epsilon); exponents reduce mod 2.
  bool involutive = false;

  bool operator==(const Variable&) const = default;
};

/// An ordered list of named variables. Alphabets are interned: equal variable
/// lists yield the same pointer, so alphabet equality is pointer equality and
/// instances live for the whole program.
class Alphabet {
 public:
  static const Alphabet* intern(std::vector<Variable> variables);
  static const Alphabet* of(std::initializer_list<std::string_view> names);

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::string& name(std::size_t index) const { return variables_.at(index).name; }
  bool involutive(std::size_t index) const { return variables_.at(index).involutive; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Index of `name`, throwing ConfigurationError if it is not declared.
  std::size_t require(std::string_view name) const;

 private:
  explicit Alphabet(std::vector<Variable> variables) : variables_(std::move(variables)) {}
  std::vector<Variable> variables_;
};

/// Alphabet of the result of a binary operation. A null alphabet marks a
/// constant and combines with anything; two distinct non-null alphabets raise
/// ConfigurationError.
const Alphabet* unify(const Alphabet* a, const Alphabet* b);

}  // namespace slnaw
