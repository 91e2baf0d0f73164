// One line per acceptance criterion: PASS/FAIL, elapsed time against its limit.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "slnaw/aw/extraction.hpp"
#include "slnaw/charges/charges.hpp"
#include "slnaw/frt/generators.hpp"
#include "slnaw/onsager/b_matrix.hpp"
#include "slnaw/onsager/onsager_algebra.hpp"
#include "slnaw/rmatrix/r_matrix.hpp"

using namespace slnaw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Check& c, const std::string& where) {
    std::string what = where + ": " + c.name;
    if (c.locator) what += " at " + c.locator->entry + " residual " + c.locator->residual;
    require(c.passed(), what);
  }
  void require(const Report& r, const std::string& where) {
    for (const auto& c : r.checks) {
      if (c.status == Status::Fail) require(c, where);
    }
  }
  void expect_failure(const Check& c, const std::string& where) {
    require(!c.passed() && c.locator.has_value(), "negative control did not fail with a locator: " + where);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

rmatrix::TensorOperator flip_one_sign(const rmatrix::TensorOperator& r) {
  rmatrix::ScalarOperator num = r.numerator();
  const LegIndex row{0, 1};
  const LegIndex col{1, 0};
  num.add(row, col, num.at(row, col).scaled(ParamPoly(-2)));
  return rmatrix::TensorOperator(num, r.denominator());
}

Outcome r_matrix_suite() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const std::string at = "N=" + std::to_string(n);
    o.require(rmatrix::check_skew(rmatrix::build_r(n)), at);
    o.require(rmatrix::check_cybe(rmatrix::build_r(n)), at);
    rmatrix::TensorOperator bad = flip_one_sign(rmatrix::build_r(n));
    o.expect_failure(rmatrix::check_skew(bad), "skew " + at);
    o.expect_failure(rmatrix::check_cybe(bad), "cybe " + at);
  }
  o.detail = o.ok ? "skew + CYBE N=2..5, sign-flip controls located" : o.detail;
  return o;
}

Outcome folding_suite() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) o.require(rmatrix::ns_cybe_report(n), "N=" + std::to_string(n));
  if (o.ok) o.detail = "folded = closed form, non-standard CYBE, N=2..5";
  return o;
}

Outcome automorphism_suite() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) o.require(frt::automorphism_report("theta1", n, 3, 1, 4), "theta1 N=" + std::to_string(n));
  for (int n : {2, 4}) {
    for (int eps : {1, -1}) {
      o.require(frt::automorphism_report("theta2", n, 3, eps, 4),
                "theta2 N=" + std::to_string(n) + " eps=" + std::to_string(eps));
    }
  }
  if (o.ok) o.detail = "theta1 N=2..4, theta2 N=2,4 both eps, L=3, matrix forms D=4";
  return o;
}

Outcome frt_suite() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    o.require(frt::frt_report(n, 6), "N=" + std::to_string(n));
    o.expect_failure(frt::frt_without_central(n, 6), "central term omitted N=" + std::to_string(n));
  }
  if (o.ok) o.detail = "N=2..4 D=6, central-term control located";
  return o;
}

Outcome onsager_suite() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) o.require(onsager::onsager_report(n, 3), "N=" + std::to_string(n));
  o.expect_failure(onsager::check_presentation_agreement(onsager::OnsagerAlgebra(3, 0), 1), "flipped relation sign");
  if (o.ok) o.detail = "agreement, UI relations, N-generator presentation; N=2..4, L=3";
  return o;
}

Outcome reflection_suite() {
  Outcome o;
  for (auto [n, d] : {std::pair{2, 6}, std::pair{3, 6}, std::pair{4, 5}}) {
    const std::string at = "N=" + std::to_string(n) + " D=" + std::to_string(d);
    o.require(onsager::reflection_report(n, d), at);
    o.require(onsager::currents_report(n, d), at);
  }
  o.expect_failure(onsager::check_reflection(2, 6, false), "unfolded kernel");
  if (o.ok) o.detail = "reflection + currents N=2,3 D=6, N=4 D=5";
  return o;
}

Outcome charges_suite() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) o.require(charges::check_trace_condition(n), "trace condition N=" + std::to_string(n));
  std::string constants;
  for (auto [n, k] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{4, 3}}) {
    Report r = charges::charges_report(n, k);
    o.require(r, "N=" + std::to_string(n) + " K=" + std::to_string(k));
    for (const auto& c : r.checks) {
      if (c.name.find("I_0") != std::string::npos && constants.empty()) constants = c.note;
    }
  }
  o.expect_failure(charges::check_trace_condition(3, charges::MOptions{true}), "sign-dropped M");
  o.expect_failure(charges::check_charge_commutativity(2, 2, true), "flipped kappastar_12");
  if (o.ok) o.detail = "trace condition N=2..5, charges N=2,3 K=4, N=4 K=3; " + constants;
  return o;
}

Outcome aw_suite() {
  Outcome o;
  o.require(aw::aw_report(3), "N=3");
  o.require(aw::aw_report(4), "N=4");
  o.require(aw::check_generation_rank(aw::aw3_table(), 3), "depth-3 rank");
  aw::StructTable bad = aw::aw3_table({true, false});
  o.expect_failure(aw::check_jacobi(bad), "dropped alpha");
  if (o.ok) o.detail = "Jacobi, exact reflection, presentations, rank 8 at depth 3";
  return o;
}

Outcome extraction_suite() {
  Outcome o;
  std::string notes;
  for (int n = 3; n <= 5; ++n) {
    Report r = aw::extraction_report(n, std::nullopt);
    o.require(r, "N=" + std::to_string(n));
    bool matched = n == 5;
    for (const auto& c : r.checks) {
      if (c.name.rfind("graded isomorphism", 0) == 0) matched = c.passed();
    }
    o.require(matched, "no isomorphism check for N=" + std::to_string(n));
    for (const auto& [k, v] : r.params) {
      if (k == "convention") notes += " N=" + std::to_string(n) + ":" + v;
    }
  }
  if (o.ok) o.detail = "N=3,4 matched, N=5 antisymmetric + Jacobi; convention" + notes;
  return o;
}

std::string run_command(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  return out;
}

Outcome determinism_suite(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no --cli path given");
    return o;
  }
  const std::vector<std::string> suites = {
      "verify cybe --n 3",
      "verify skew --n 3",
      "verify ns-cybe --n 3",
      "verify automorphism --which theta1 --n 3 --levels 2",
      "verify automorphism --which theta2 --n 2 --levels 2 --epsilon -1",
      "verify frt --n 2 --cutoff 5",
      "verify onsager --n 3 --levels 2",
      "verify reflection --n 2 --cutoff 5",
      "verify currents --n 2 --cutoff 5",
      "verify charges --n 2 --max-order 3",
      "verify aw --n 3",
      "verify aw --n 4",
      "extract aw --n 4 --out /dev/null",
      "charges print --n 3 --max-order 2",
  };
  const std::regex elapsed("\\n\\s*\"elapsed_ms\": [0-9]+");
  for (const auto& s : suites) {
    const std::string cmd = cli + " " + s + " --format json --parallel on";
    std::string a = std::regex_replace(run_command(cmd), elapsed, "");
    std::string b = std::regex_replace(run_command(cmd), elapsed, "");
    o.require(!a.empty() && a.find("\"schema\": 1") != std::string::npos, "no JSON from: " + s);
    o.require(a == b, "reports differ for: " + s);
  }
  if (o.ok) o.detail = std::to_string(suites.size()) + " suites byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  const std::vector<Criterion> criteria = {
      {1, "r-matrix suite", 60, r_matrix_suite},
      {2, "folding suite", 120, folding_suite},
      {3, "automorphism suite", 120, automorphism_suite},
      {4, "FRT suite", 300, frt_suite},
      {5, "Onsager equivalence", 300, onsager_suite},
      {6, "reflection and currents", 600, reflection_suite},
      {7, "charges", 600, charges_suite},
      {8, "Askey-Wilson suite", 120, aw_suite},
      {9, "extraction", 900, extraction_suite},
      {10, "determinism", 600, [&cli] { return determinism_suite(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL") << "  (" << secs << " s, limit "
         << c.limit_seconds << " s)";
    if (!in_time) line << "  time limit exceeded;";
    line << "  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
