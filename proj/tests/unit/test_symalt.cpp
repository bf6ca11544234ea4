#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chardeg/errors.hpp"
#include "chardeg/symalt.hpp"
#include "chardeg/young.hpp"

using namespace chardeg;
using exact::BigInt;

namespace {

DegreeMultiset dm(std::vector<std::pair<BigInt, std::uint64_t>> e) { return DegreeMultiset(e); }

// Largest hook degree over non-self-conjugate partitions, straight from the
// definition.
BigInt rho_oracle(int n) {
  BigInt best = 0;
  young::for_each_partition(n, [&](const young::Partition& p) {
    if (young::is_self_conjugate(p)) return;
    BigInt d = young::hook_degree(p);
    if (d > best) best = d;
  });
  return best;
}

}  // namespace

TEST_CASE("symmetric group degrees") {
  CHECK(symalt::sn_degrees(1) == dm({{1, 1}}));
  CHECK(symalt::sn_degrees(3) == dm({{1, 2}, {2, 1}}));
  CHECK(symalt::sn_degrees(5) == dm({{1, 2}, {4, 2}, {5, 2}, {6, 1}}));
  CHECK(symalt::sn_degrees(5).to_string() == "{6:1, 5:2, 4:2, 1:2}");
}

TEST_CASE("alternating group degrees") {
  CHECK(symalt::an_degrees(3) == dm({{1, 3}}));
  CHECK(symalt::an_degrees(4) == dm({{1, 3}, {3, 1}}));
  CHECK(symalt::an_degrees(5) == dm({{1, 1}, {3, 2}, {4, 1}, {5, 1}}));
  for (int n = 2; n <= 12; ++n) {
    BigInt f = exact::factorial(static_cast<unsigned long>(n));
    CHECK(symalt::sn_degrees(n).sum_of_squares() == f);
    CHECK(symalt::an_degrees(n).sum_of_squares() * 2 == f);
    CHECK(symalt::sn_degrees(n).character_count() == young::partition_count(n));
  }
}

TEST_CASE("parallel sweeps agree with serial ones") {
  CHECK(symalt::sn_degrees(24, 3) == symalt::sn_degrees(24, 1));
  CHECK(symalt::an_degrees(23, 4) == symalt::an_degrees(23, 1));
  CHECK(symalt::rho_an(30, 3) == symalt::rho_an(30, 1));
}

TEST_CASE("rho of small alternating groups") {
  CHECK(symalt::rho_an(5) == 5);
  CHECK(symalt::rho_an(7) == 35);
  // (4,1,1) is not self-conjugate and has degree 10.
  CHECK(symalt::rho_an(6) == 10);
  CHECK(symalt::rho_an_detail(7).attained_by == young::Partition({4, 2, 1}));
  for (int n = 5; n <= 22; ++n) {
    CHECK(symalt::rho_an(n) == rho_oracle(n));
    CHECK(symalt::rho_an(n) <= symalt::sn_degrees(n).max_degree());
  }
  CHECK_THROWS_AS(symalt::rho_an(4), ResourceLimitError);
  CHECK_THROWS_AS(symalt::rho_an(61), ResourceLimitError);
  CHECK_THROWS_AS(symalt::sn_degrees(61), ResourceLimitError);
}

TEST_CASE("direct rho inequality") {
  CHECK(symalt::rho_direct_holds(7, 35));
  CHECK(symalt::rho_direct_holds(7, 19));
  CHECK(!symalt::rho_direct_holds(7, 18));
  // 18^8 * 8 < 5040^3 < 19^8 * 8.
  CHECK(exact::pow(18ul, 8) * 8 < exact::pow(5040ul, 3));
  CHECK(exact::pow(19ul, 8) * 8 > exact::pow(5040ul, 3));
}

TEST_CASE("growth inequalities") {
  using symalt::Growth;
  for (Growth g : symalt::kAllGrowth) {
    CHECK(symalt::check_growth(g, 75).verdict == exact::Verdict::holds);
    CHECK(symalt::check_growth(g, 1000000).verdict == exact::Verdict::holds);
  }
  CHECK(symalt::check_growth(Growth::refined, 74).verdict == exact::Verdict::fails);
  CHECK(symalt::check_growth(Growth::quotient, 74).verdict == exact::Verdict::holds);
}

TEST_CASE("verify_rho_growth small configuration") {
  auto rep = symalt::verify_rho_growth(7, 80, {});
  CHECK(rep.passed());
  REQUIRE(rep.direct_values.size() == 1);
  CHECK(rep.direct_values[0].rho == 35);
  CHECK(rep.induct_checked == 6);
  CHECK_THROWS_AS(symalt::verify_rho_growth(61, 80), ResourceLimitError);
}
