#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chardeg/bounds.hpp"
#include "chardeg/errors.hpp"
#include "chardeg/psl2.hpp"
#include "chardeg/symalt.hpp"

using namespace chardeg;
using namespace chardeg::bounds;
using psl2::psl2_degrees;
using symalt::an_degrees;

TEST_CASE("e decomposition") {
  CHECK(e_of(60, 5).e == 7);
  CHECK(e_of(1, 1).e == 0);
  CHECK(e_of(8, 2).e == 2);
  CHECK_THROWS_AS(e_of(60, 7), std::invalid_argument);
  CHECK_THROWS_AS(e_of(60, 12), std::invalid_argument);
  CHECK_THROWS_AS(e_of(60, 0), std::invalid_argument);
  for (long n = 1; n <= 10000; ++n)
    for (long d = 1; d * d <= n; ++d)
      if (n % d == 0) REQUIRE(d * (d + e_of(n, d).e) == n);
}

TEST_CASE("e^4 - e^3 bound") {
  auto r54 = verify_e4_bound(e_of(54, 6));
  CHECK(r54.holds);
  CHECK(r54.slack == 0);
  auto r192 = verify_e4_bound(e_of(192, 12));
  CHECK(r192.holds);
  CHECK(r192.slack == 0);
  auto r60 = verify_e4_bound(e_of(60, 5));
  CHECK(r60.holds);
  CHECK(r60.slack == 1998);
  CHECK_THROWS_AS(verify_e4_bound(e_of(1, 1)), OutOfHypothesisError);
  CHECK_THROWS_AS(verify_e4_bound(e_of(2, 1)), OutOfHypothesisError);
  // An order with no group behind it can violate the bound.
  auto v = verify_e4_bound(e_of(24, 4));
  CHECK(!v.holds);
  CHECK(v.slack == -16);
  for (unsigned q = 2; q <= 100; ++q) {
    if (!exact::as_prime_power(q)) continue;
    BigInt order = BigInt(q) * q * q * (q - 1);
    auto dec = e_of(order, BigInt(q) * (q - 1));
    CHECK(dec.e == q);
    CHECK(verify_e4_bound(dec).slack == 0);
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon_of(psl2_degrees(5)) == Rational(7, 5));
  CHECK(epsilon_of(psl2_degrees(7)) == Rational(13, 8));
  CHECK(epsilon_of(DegreeMultiset({{1, 1}})) == 0);
  // Every copy of the top degree is excluded.
  CHECK(epsilon_of(DegreeMultiset({{1, 1}, {2, 3}})) == Rational(1, 4));
  CHECK_THROWS_AS(epsilon_of(DegreeMultiset()), std::invalid_argument);
}

TEST_CASE("simple bound report") {
  auto r7 = simple_bound_report(psl2_degrees(7));
  CHECK(r7.order == 168);
  CHECK(r7.b == 8);
  CHECK(r7.gt_2b2);
  CHECK(r7.e_at_b == 13);
  CHECK(r7.lt_2e2 == true);
  CHECK(r7.epsilon_gt_1);
  CHECK(r7.implication_holds);
  auto r5 = simple_bound_report(psl2_degrees(5));
  CHECK(r5.order == 60);
  CHECK(r5.gt_2b2);
  CHECK(r5.e_at_b == 7);
  CHECK(r5.lt_2e2 == true);
  auto r1 = simple_bound_report(DegreeMultiset({{1, 1}}));
  CHECK(r1.order == 1);
  CHECK(!r1.gt_2b2);
  CHECK(!r1.epsilon_gt_1);
  CHECK(r1.implication_holds);
  // b = 3 does not divide 1 + 1 + 9 = 11.
  auto odd = simple_bound_report(DegreeMultiset({{1, 2}, {3, 1}}));
  CHECK(!odd.e_at_b);
  CHECK(!odd.lt_2e2);
  for (int n = 5; n <= 20; ++n) {
    auto r = simple_bound_report(an_degrees(n));
    CHECK(r.epsilon_gt_1);
    CHECK(r.implication_holds);
  }
}

TEST_CASE("composition bound") {
  auto a = composition_bound(5, 7, 5, 7);
  CHECK(a.order == 3600);
  CHECK(a.e_min == 119);
  CHECK(a.exceeds_2sqrt);
  auto b = composition_bound(1, 1, 1, 1);
  CHECK(b.order == 4);
  CHECK(b.e_min == 3);
  CHECK(b.exceeds_2sqrt);
  auto c = composition_bound(8, 13, 8, 13);
  CHECK(c.order == 64 * 441);
  CHECK(c.e_min == 377);
  CHECK_THROWS_AS(composition_bound(5, 0, 5, 7), OutOfHypothesisError);
  CHECK_THROWS_AS(composition_bound(0, 1, 5, 7), std::invalid_argument);
}

TEST_CASE("Gagola pair arithmetic") {
  for (auto [order, d, n, p, sp] : std::vector<std::tuple<int, int, int, unsigned, int>>{
           {54, 6, 3, 3, 27}, {192, 12, 4, 2, 64}, {8, 2, 2, 2, 8}}) {
    auto r = gagola_arithmetic(order, d, n, p, sp);
    CHECK(r.passed());
  }
  CHECK(gagola_arithmetic(54, 6, 3, 3, 27).e == 3);
  // A wrong N order breaks the index and degree relations.
  auto bad = gagola_arithmetic(54, 6, 9, 3, 27);
  CHECK(!bad.index_is_e_squared);
  CHECK(!bad.degree_relation);
  CHECK_THROWS_AS(gagola_arithmetic(54, 6, 6, 3, 27), std::invalid_argument);
  CHECK_THROWS_AS(gagola_arithmetic(54, 6, 3, 4, 27), std::invalid_argument);
  CHECK_THROWS_AS(gagola_arithmetic(54, 6, 3, 3, 9), std::invalid_argument);
}
