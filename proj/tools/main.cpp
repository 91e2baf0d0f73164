#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>

#include "slnaw/aw/extraction.hpp"
#include "slnaw/charges/charges.hpp"
#include "slnaw/core/parallel.hpp"
#include "slnaw/exactnum/errors.hpp"
#include "slnaw/frt/generators.hpp"
#include "slnaw/onsager/b_matrix.hpp"
#include "slnaw/onsager/onsager_algebra.hpp"
#include "slnaw/rmatrix/r_matrix.hpp"

namespace {

using namespace slnaw;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInvalid = 3 };

struct Options {
  int n = 3;
  int cutoff = 4;
  int levels = 2;
  int max_order = 3;
  int epsilon = 1;
  std::string which = "theta1";
  std::string convention;
  std::string out;
  std::string format = "text";
  std::string parallel = "on";
  unsigned long seed = 0;
};

std::string charges_document(const Options& o) {
  onsager::OnsagerAlgebra alg(o.n);
  charges::ChargeParams p(o.n);
  const auto list = charges::extract_charges(alg, p, o.max_order);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = "charges print";
    j["params"] = {{"n", std::to_string(o.n)}, {"max-order", std::to_string(o.max_order)}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : list) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [sym, coeff] : c.value.terms()) terms.push_back({sym.name(), coeff.to_string()});
      arr.push_back({{"order", c.order}, {"terms", terms}});
    }
    j["charges"] = arr;
    return j.dump(2) + "\n";
  }
  std::string s;
  for (const auto& c : list) s += "I_" + std::to_string(c.order) + " = " + onsager::to_string(c.value) + "\n";
  return s;
}

int emit(const Report& r, const Options& o) {
  std::cout << (o.format == "json" ? r.to_json() + "\n" : r.to_text());
  return r.all_passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of sl_N Onsager and Askey-Wilson identities"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallel", o.parallel, "Fan out independent checks")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--seed", o.seed, "Seed for randomized property subsets (exhaustive suites ignore it)");

  std::function<Report()> job;
  std::function<std::string()> document;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto n_opt = [&o](CLI::App* c) { c->add_option("--n", o.n, "Rank parameter N")->required(); };

  for (auto [name, fn] : {std::pair<const char*, Report (*)(int)>{"cybe", rmatrix::cybe_report},
                          {"ns-cybe", rmatrix::ns_cybe_report},
                          {"skew", rmatrix::skew_report}}) {
    auto* c = verify->add_subcommand(name, std::string("r-matrix suite: ") + name);
    n_opt(c);
    c->callback([&job, &o, fn = fn] { job = [&o, fn] { return fn(o.n); }; });
  }
  {
    auto* c = verify->add_subcommand("automorphism", "Automorphism suite");
    n_opt(c);
    c->add_option("--which", o.which)->required()->check(CLI::IsMember({"theta1", "theta2"}));
    c->add_option("--levels", o.levels, "Level cutoff for bracket checks")->required();
    c->add_option("--epsilon", o.epsilon, "Sign for theta2")->check(CLI::IsMember({1, -1}));
    c->add_option("--cutoff", o.cutoff, "Series cutoff for the matrix forms");
    c->callback([&] { job = [&o] { return frt::automorphism_report(o.which, o.n, o.levels, o.epsilon, o.cutoff); }; });
  }
  auto with_cutoff = [&](const char* name, const char* help, Report (*fn)(int, int)) {
    auto* c = verify->add_subcommand(name, help);
    n_opt(c);
    c->add_option("--cutoff", o.cutoff, "Series cutoff D")->required();
    c->callback([&job, &o, fn] { job = [&o, fn] { return fn(o.n, o.cutoff); }; });
  };
  with_cutoff("frt", "FRT relations", frt::frt_report);
  with_cutoff("reflection", "Reflection relation for B(x)", onsager::reflection_report);
  with_cutoff("currents", "Current algebra relations", onsager::currents_report);
  {
    auto* c = verify->add_subcommand("onsager", "Onsager presentations");
    n_opt(c);
    c->add_option("--levels", o.levels, "Level cutoff L")->required();
    c->callback([&] { job = [&o] { return onsager::onsager_report(o.n, o.levels); }; });
  }
  {
    auto* c = verify->add_subcommand("charges", "Commuting charges");
    n_opt(c);
    c->add_option("--max-order", o.max_order, "Highest charge order K")->required();
    c->callback([&] { job = [&o] { return charges::charges_report(o.n, o.max_order); }; });
  }
  {
    auto* c = verify->add_subcommand("aw", "Askey-Wilson quotient suite");
    n_opt(c);
    c->callback([&] { job = [&o] { return aw::aw_report(o.n); }; });
  }

  auto* extract = app.add_subcommand("extract", "Extract a structure table");
  extract->require_subcommand(1);
  {
    auto* c = extract->add_subcommand("aw", "Solve the general ansatz for its bracket table");
    n_opt(c);
    c->add_option("--convention", o.convention, "literal or no-outer-sign (default: selected)");
    c->add_option("--out", o.out, "Table output file")->required();
    c->callback([&] {
      job = [&o] {
        std::optional<aw::Convention> conv;
        if (!o.convention.empty()) conv = aw::parse_convention(o.convention);
        std::optional<aw::StructTable> table;
        Report r = aw::extraction_report(o.n, conv, &table);
        if (table) {
          std::ofstream f(o.out, std::ios::binary);
          if (!f) throw ConfigurationError("cannot write " + o.out);
          f << aw::export_table(*table);
          r.params.emplace_back("out", o.out);
        }
        return r;
      };
    });
  }

  auto* charges_cmd = app.add_subcommand("charges", "Charge tables");
  charges_cmd->require_subcommand(1);
  {
    auto* c = charges_cmd->add_subcommand("print", "Print I_0..I_K");
    n_opt(c);
    c->add_option("--max-order", o.max_order, "Highest charge order K")->required();
    c->callback([&] { document = [&o] { return charges_document(o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  set_parallel(o.parallel == "on");
  try {
    if (document) {
      std::cout << document();
      return kPass;
    }
    const auto start = std::chrono::steady_clock::now();
    Report r = job();
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return emit(r, o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
