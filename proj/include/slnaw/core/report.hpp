#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slnaw {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

/// Where a check first failed: matrix entry, offending monomial as
/// (variable, exponent) pairs, and the residual coefficient.
struct Locator {
  std::string entry;
  std::vector<std::pair<std::string, int>> monomial;
  std::string residual;
};

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::optional<Locator> locator;
  std::string note;

  static Check pass(std::string name, std::string note = {});
  static Check fail(std::string name, Locator where, std::string note = {});
  static Check skipped(std::string name, std::string note);
  bool passed() const { return status == Status::Pass; }
};

/// Outcome of a verification run. Check order is fixed by the caller, never
/// by scheduling, so reports of identical runs are identical.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  bool all_passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other);

  /// JSON document with top-level "schema": 1.
  std::string to_json(bool include_elapsed = true) const;
  std::string to_text() const;
};

/// Merges a Check list into a single check: the first failure wins.
Check combine(std::string name, const std::vector<Check>& parts, std::string note = {});

}  // namespace slnaw
