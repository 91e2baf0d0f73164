#include "slnaw/core/report.hpp"

#include <json.hpp>
#include <sstream>

namespace slnaw {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

Check Check::pass(std::string name, std::string note) {
  return Check{std::move(name), Status::Pass, std::nullopt, std::move(note)};
}

Check Check::fail(std::string name, Locator where, std::string note) {
  return Check{std::move(name), Status::Fail, std::move(where), std::move(note)};
}

Check Check::skipped(std::string name, std::string note) {
  return Check{std::move(name), Status::Skipped, std::nullopt, std::move(note)};
}

bool Report::all_passed() const {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

std::string Report::to_json(bool include_elapsed) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = to_string(c.status);
    if (c.locator) {
      nlohmann::ordered_json loc;
      loc["entry"] = c.locator->entry;
      nlohmann::ordered_json mono = nlohmann::ordered_json::array();
      for (const auto& [var, e] : c.locator->monomial) mono.push_back({var, e});
      loc["monomial"] = mono;
      loc["residual"] = c.locator->residual;
      jc["locator"] = loc;
    }
    if (!c.note.empty()) jc["note"] = c.note;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  j["passed"] = all_passed();
  if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command;
  for (const auto& [k, v] : params) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& c : checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
    if (c.locator) {
      out << "      at entry " << c.locator->entry;
      if (!c.locator->monomial.empty()) {
        out << " monomial";
        for (const auto& [var, e] : c.locator->monomial) out << " " << var << "^" << e;
      }
      out << "\n      residual " << c.locator->residual << "\n";
    }
  }
  out << (all_passed() ? "PASS" : "FAIL") << "  (" << elapsed_ms << " ms)\n";
  return out.str();
}

Check combine(std::string name, const std::vector<Check>& parts, std::string note) {
  for (const auto& p : parts) {
    if (p.status == Status::Fail) {
      Locator loc = p.locator.value_or(Locator{});
      if (!p.name.empty()) loc.entry = p.name + (loc.entry.empty() ? "" : " " + loc.entry);
      return Check::fail(std::move(name), std::move(loc), note.empty() ? p.note : std::move(note));
    }
  }
  return Check::pass(std::move(name), std::move(note));
}

}  // namespace slnaw
