#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slnaw/core/lincomb.hpp"
#include "slnaw/core/report.hpp"

namespace slnaw::aw {

/// Element of a finite-dimensional Lie algebra, keyed by basis position.
using AWElement = LinComb<int>;

/// The {alpha} parameter alphabet shared by all quotient tables.
const Alphabet* alpha_alphabet();
ParamPoly alpha();

/// Nested commutator over abstract generators e_1..e_N.
class FreeWord {
 public:
  static FreeWord generator(int i);
  static FreeWord bracket(FreeWord a, FreeWord b);
  /// [e_i,[e_{i+1},[...,e_j]]] stepping cyclically through 1..n.
  static FreeWord chain(int i, int j, int n);
  /// Inverse of to_string(), e.g. "[e1,[e2,e3]]".
  static FreeWord parse(std::string_view text);

  bool is_generator() const;
  int generator_index() const;
  const FreeWord& left() const;
  const FreeWord& right() const;
  int length() const;
  std::string to_string() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.to_string() == b.to_string(); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

class StructTable {
 public:
  StructTable() = default;
  StructTable(std::string name, std::vector<std::string> basis, const Alphabet* params);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Alphabet* params() const { return params_; }
  std::optional<int> index_of(std::string_view name) const;

  /// Basis element or dependent symbol, as an element.
  AWElement symbol(std::string_view name) const;
  void define_dependent(std::string name, AWElement value);
  const std::vector<std::pair<std::string, AWElement>>& dependents() const { return dependents_; }

  /// Stores [b_i, b_j] (and implicitly [b_j, b_i] = -[b_i, b_j]).
  void set_bracket(int i, int j, const AWElement& value);
  AWElement basis_bracket(int i, int j) const;
  AWElement bracket(const AWElement& a, const AWElement& b) const;

  /// Basis positions of the generators e_1..e_N.
  const std::vector<int>& generators() const { return generators_; }
  void set_generators(std::vector<int> g) { generators_ = std::move(g); }
  /// Defining word of each basis element, when known.
  const std::vector<std::optional<FreeWord>>& words() const { return words_; }
  void set_word(int i, FreeWord w) { words_.at(static_cast<std::size_t>(i)) = std::move(w); }

  std::string render(const AWElement& e) const;

  friend bool operator==(const StructTable& a, const StructTable& b);

 private:
  std::string name_;
  std::vector<std::string> basis_;
  const Alphabet* params_ = nullptr;
  std::vector<std::pair<std::string, AWElement>> dependents_;
  std::map<std::pair<int, int>, AWElement> brackets_;
  std::vector<int> generators_;
  std::vector<std::optional<FreeWord>> words_;
};

/// Evaluates a word with generator e_i sent to images[i-1].
AWElement eval_word(const FreeWord& w, const StructTable& t, const std::vector<AWElement>& images);
/// Evaluates with e_i sent to the table's own generator i.
AWElement eval_word(const FreeWord& w, const StructTable& t);

/// Structured text form: basis, parameters, dependents, generators, words and
/// all nonzero brackets. import(export(t)) == t and re-export is byte-identical.
std::string export_table(const StructTable& t);
StructTable import_table(std::string_view text);

/// Jacobi on all basis triples i < j < k (sufficient given antisymmetry).
Check check_jacobi(const StructTable& t);

}  // namespace slnaw::aw
