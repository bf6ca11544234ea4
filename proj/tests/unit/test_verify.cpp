#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "chardeg/errors.hpp"
#include "chardeg/verify.hpp"

using namespace chardeg;
using namespace chardeg::verify;

namespace {

Config small() {
  Config c;
  c.sections = {"rho", "bounds", "poly"};
  c.n_direct_max = 7;
  c.n_induct_max = 100;
  c.spot_checks = {};
  c.an_epsilon_max = 8;
  return c;
}

}  // namespace

TEST_CASE("small configuration") {
  auto run = verify_all(small());
  REQUIRE(!run.results.empty());
  for (const auto& r : run.results) {
    CAPTURE(r.id);
    CHECK(r.status != Status::fail);
  }
  auto direct = std::find_if(run.results.begin(), run.results.end(),
                             [](const ClaimResult& r) { return r.id == "symalt/rho-direct"; });
  REQUIRE(direct != run.results.end());
  CHECK(direct->status == Status::pass);
  CHECK(direct->witnesses.size() == 1);
}

TEST_CASE("claims appear once and reports are deterministic") {
  auto c = small();
  c.jobs = 3;
  auto a = verify_all(c), b = verify_all(small());
  std::set<std::string> ids;
  for (const auto& r : a.results) CHECK(ids.insert(r.id).second);
  CHECK(report_json(a, false) == report_json(b, false));
  auto j = nlohmann::json::parse(report_json(a));
  REQUIRE(j.is_array());
  CHECK(j[0].contains("seconds"));
  CHECK(!nlohmann::json::parse(report_json(a, false))[0].contains("seconds"));
}

TEST_CASE("configuration errors come first") {
  Config c = small();
  c.sections = {"nonsense"};
  CHECK_THROWS_AS(verify_all(c), ConfigError);
  c = small();
  c.torus_table = "/nonexistent/torus.json";
  CHECK_THROWS_AS(verify_all(c), ConfigError);
  c = small();
  c.degree_files = {"/nonexistent/records.jsonl"};
  CHECK_THROWS_AS(verify_all(c), ConfigError);
  c = small();
  c.n_direct_max = 3;
  CHECK_THROWS_AS(verify_all(c), ConfigError);
}

TEST_CASE("status names and exit code") {
  CHECK(to_string(Status::out_of_scope) == "out-of-scope");
  Run r;
  r.results.push_back({"a", Status::pass, {}, {}, "", 0});
  r.results.push_back({"b", Status::out_of_scope, {}, {}, "", 0});
  CHECK(r.exit_code() == 0);
  r.results.push_back({"c", Status::inconclusive, {}, {}, "", 0});
  CHECK(r.exit_code() != 0);
}
