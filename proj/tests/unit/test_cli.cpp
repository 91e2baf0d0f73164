#include <doctest.h>

#include <json.hpp>

#include "slnaw/aw/extraction.hpp"
#include "slnaw/charges/charges.hpp"
#include "slnaw/core/parallel.hpp"
#include "slnaw/onsager/onsager_algebra.hpp"
#include "slnaw/rmatrix/r_matrix.hpp"

using namespace slnaw;

namespace {

struct ParallelGuard {
  explicit ParallelGuard(bool on) { set_parallel(on); }
  ~ParallelGuard() { set_parallel(true); }
};

}  // namespace

TEST_CASE("report JSON schema") {
  Report r = rmatrix::cybe_report(3);
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "verify cybe");
  CHECK(j["params"]["n"] == "3");
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["passed"] == true);
  CHECK(j.contains("elapsed_ms"));
  CHECK_FALSE(nlohmann::json::parse(r.to_json(false)).contains("elapsed_ms"));
}

TEST_CASE("failures always carry a locator") {
  Report r;
  r.add(Check::fail("x", Locator{"(1,1)", {{"x", 2}}, "3*c"}));
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["locator"]["monomial"][0][0] == "x");
  CHECK(j["checks"][0]["locator"]["monomial"][0][1] == 2);
  CHECK(r.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("skipped checks do not fail a report") {
  Report r;
  r.add(Check::pass("a"));
  r.add(Check::skipped("b", "not applicable"));
  CHECK(r.all_passed());
}

TEST_CASE("repeated runs give identical JSON") {
  CHECK(aw::aw_report(3).to_json(false) == aw::aw_report(3).to_json(false));
  CHECK(onsager::onsager_report(3, 1).to_json(false) == onsager::onsager_report(3, 1).to_json(false));
  CHECK(charges::charges_report(2, 2).to_json(false) == charges::charges_report(2, 2).to_json(false));
}

TEST_CASE("parallel and serial runs agree") {
  std::string serial;
  std::string parallel;
  {
    ParallelGuard g(false);
    serial = aw::extraction_report(4, std::nullopt).to_json(false);
  }
  {
    ParallelGuard g(true);
    parallel = aw::extraction_report(4, std::nullopt).to_json(false);
  }
  CHECK(serial == parallel);
  // the failing Jacobi locator does not depend on scheduling either
  aw::StructTable bad = aw::aw3_table({true, false});
  Check a;
  Check b;
  {
    ParallelGuard g(false);
    a = aw::check_jacobi(bad);
  }
  b = aw::check_jacobi(bad);
  REQUIRE(a.locator.has_value());
  REQUIRE(b.locator.has_value());
  CHECK(a.locator->entry == b.locator->entry);
}

TEST_CASE("ordered helpers") {
  for (bool on : {false, true}) {
    ParallelGuard g(on);
    auto squares = ordered_map<int>(10, [](std::size_t i) { return static_cast<int>(i * i); });
    CHECK(squares[9] == 81);
    auto hit = first_hit(100, [](std::size_t i) -> std::optional<std::size_t> {
      return i % 7 == 3 ? std::optional<std::size_t>(i) : std::nullopt;
    });
    CHECK(hit == std::optional<std::size_t>(3));
  }
}
