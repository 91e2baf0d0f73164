#include "slnaw/exactnum/alphabet.hpp"

#include <memory>
#include <mutex>

#include "slnaw/exactnum/errors.hpp"

namespace slnaw {

namespace {
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::vector<std::unique_ptr<Alphabet>>& registry() {
  static std::vector<std::unique_ptr<Alphabet>> r;
  return r;
}
}  // namespace

const Alphabet* Alphabet::intern(std::vector<Variable> variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name.empty()) throw ConfigurationError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i].name == variables[j].name) {
        throw ConfigurationError("duplicate variable '" + variables[i].name + "'");
      }
    }
  }
  std::lock_guard lock(registry_mutex());
  for (const auto& a : registry()) {
    if (a->variables_ == variables) return a.get();
  }
  registry().push_back(std::unique_ptr<Alphabet>(new Alphabet(std::move(variables))));
  return registry().back().get();
}

const Alphabet* Alphabet::of(std::initializer_list<std::string_view> names) {
  std::vector<Variable> vars;
  for (auto n : names) vars.push_back({std::string(n), false});
  return intern(std::move(vars));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Alphabet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw ConfigurationError("variable '" + std::string(name) + "' is not declared");
  return *i;
}

const Alphabet* unify(const Alphabet* a, const Alphabet* b) {
  if (a == nullptr) return b;
  if (b == nullptr || a == b) return a;
  std::string msg = "alphabet mismatch: {";
  for (const auto& v : a->variables()) msg += v.name + ",";
  msg += "} vs {";
  for (const auto& v : b->variables()) msg += v.name + ",";
  msg += "}";
  throw ConfigurationError(msg);
}

}  // namespace slnaw
