#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slnaw/aw/tables.hpp"

namespace slnaw::aw {

/// Sign conventions for the general-N ansatz. `Literal` uses the displayed
/// off-diagonal signs as printed; `NoOuterSign` drops the (-1)^{(j-i)(N+1)}
/// and (-1)^{(i-j)N} prefactors of the non-adjacent entries.
enum class Convention { Literal, NoOuterSign };

std::string to_string(Convention c);
Convention parse_convention(std::string_view s);

/// B(x) of the general ansatz; element keys index `words`.
struct GeneralAnsatz {
  int n = 0;
  Convention convention = Convention::Literal;
  std::vector<FreeWord> words;  // generators first, then by (length, text)
  std::vector<std::string> names;
  AWMatrix b;
};

GeneralAnsatz build_B_general(int n, Convention convention = Convention::Literal);

/// Replaces every word key of the ansatz by its value in `t` (words evaluated
/// with the table's generators); used to compare against an explicit matrix.
AWMatrix specialize_ansatz(const GeneralAnsatz& a, const StructTable& t);

struct Extraction {
  GeneralAnsatz ansatz;
  std::optional<StructTable> table;
  Report report;
};

/// Solves the reflection relation for all word-pair brackets. The report
/// covers consistency, uniqueness, polynomial coefficients, antisymmetry,
/// Jacobi, word definitions and the exact reflection re-check.
Extraction extract_structure_constants(int n, Convention convention = Convention::Literal);

/// Isomorphism a -> b of the graded form e_i -> s_i e_i (s_i = +-1),
/// composite basis elements -> images of their defining words. Needs words
/// for every basis element of `a`.
struct TableMatch {
  bool found = false;
  std::vector<int> signs;
  std::vector<std::string> images;  // rendered image of each basis element of a
  Check check;
};
TableMatch match_tables(const StructTable& a, const StructTable& b);

/// Copy of `t` with basis element `index` replaced by `factor` times itself.
StructTable rescale_basis(const StructTable& t, int index, const Rational& factor);

/// The convention whose specialization reproduces the explicit N = 3 or 4
/// matrix, if any.
std::optional<Convention> select_convention(int n);

/// Extraction plus, for N = 3, 4, convention selection and matching.
Report extraction_report(int n, std::optional<Convention> convention, std::optional<StructTable>* table_out = nullptr);

}  // namespace slnaw::aw
