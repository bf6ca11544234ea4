#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chardeg/errors.hpp"
#include "chardeg/gf2poly.hpp"

using namespace chardeg;
using namespace chardeg::gf2;
using exact::BigInt;

namespace {

// Remainder of a modulo b over GF(2).
std::uint64_t mod2(std::uint64_t a, std::uint64_t b) {
  int db = 63 - __builtin_clzll(b);
  while (a && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
  return a;
}

// Irreducibility by trial division over all polynomials of degree <= d/2.
bool irreducible_oracle(std::uint64_t f) {
  int d = 63 - __builtin_clzll(f);
  if (d < 1) return false;
  for (std::uint64_t g = 2; 2 * (63 - __builtin_clzll(g)) <= d; ++g)
    if (mod2(f, g) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("representation and hex") {
  Poly2 f = Poly2::from_coeffs({1, 1, 0, 1});  // 1 + x + x^3
  CHECK(f.bits() == 0xb);
  CHECK(f.degree() == 3);
  CHECK(f.to_hex() == "b");
  CHECK(Poly2::from_hex("b") == f);
  CHECK(Poly2::from_hex(f.to_hex()) == f);
  CHECK(f.coeffs() == std::vector<int>{1, 1, 0, 1});
  CHECK_THROWS_AS(Poly2(0), std::invalid_argument);
  CHECK_THROWS_AS(Poly2::from_hex("xyz"), std::invalid_argument);
  for (std::uint64_t b = 1; b < 4096; b += 7) CHECK(Poly2::from_hex(Poly2(b).to_hex()).bits() == b);
}

TEST_CASE("reciprocal") {
  Poly2 f(0xb);  // 1 + x + x^3 -> 1 + x^2 + x^3
  CHECK(poly_reciprocal(f).bits() == 0xd);
  CHECK(poly_reciprocal(poly_reciprocal(f)) == f);
  CHECK(is_self_reciprocal(Poly2(0x7)));  // x^2 + x + 1
  CHECK(is_self_reciprocal(Poly2(0x3)));  // x + 1
  CHECK_THROWS_AS(poly_reciprocal(Poly2(0x6)), std::invalid_argument);
}

TEST_CASE("Rabin test against trial division") {
  for (std::uint64_t f = 2; f < (1u << 13); ++f) REQUIRE(poly_is_irreducible(Poly2(f)) == irreducible_oracle(f));
  CHECK(poly_is_irreducible(Poly2((1ULL << 20) | 0x9)));   // x^20 + x^3 + 1
  CHECK(!poly_is_irreducible(Poly2((1ULL << 20) | 0x1)));  // x^20 + 1
}

TEST_CASE("Moebius counts") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  const unsigned expect[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (unsigned d = 1; d <= 10; ++d) CHECK(count_irreducible_monic(d) == expect[d - 1]);
  for (unsigned d = 1; d <= 16; ++d)
    CHECK(count_irreducible_monic(d) == static_cast<unsigned long>(count_irreducible_brute(d)));
  for (unsigned d = 1; d <= 20; ++d) {
    BigInt total = 0;
    for (unsigned e = 1; e <= d; ++e)
      if (d % e == 0) total += e * count_irreducible_monic(e);
    CHECK(total == exact::pow(2ul, d));
  }
  for (unsigned d = 3; d <= 30; ++d) CHECK(4 * d * count_irreducible_monic(d) >= 3 * exact::pow(2ul, d));
}

TEST_CASE("self-reciprocal counts") {
  const unsigned table[] = {1, 1, 1, 2, 3, 5, 9};
  for (unsigned d = 1; d <= 7; ++d) CHECK(count_self_reciprocal(d, CountMode::formula) == table[d - 1]);
  CHECK(count_self_reciprocal(8, CountMode::formula) == 16);
  for (unsigned d = 1; d <= 10; ++d)
    CHECK(count_self_reciprocal(d, CountMode::formula) == count_self_reciprocal(d, CountMode::brute_force));
  CHECK_THROWS_AS(count_self_reciprocal(11, CountMode::brute_force), ResourceLimitError);
  CHECK_THROWS_AS(count_self_reciprocal(0, CountMode::formula), std::invalid_argument);
}

TEST_CASE("self-reciprocal irreducibles have even degree beyond x + 1") {
  for (unsigned d = 1; d <= 16; ++d)
    for (const auto& f : irreducibles_of_degree(d))
      if (is_self_reciprocal(f)) CHECK((d % 2 == 0 || f.bits() == 0x3));
}

TEST_CASE("reciprocal-closed sets") {
  for (unsigned d0 = 1; d0 <= 10; ++d0) {
    auto fs = reciprocal_closed_set(d0);
    CHECK(2 * BigInt(static_cast<unsigned long>(fs.size())) >= count_irreducible_monic(d0));
    for (auto b : fs) CHECK(is_self_reciprocal(Poly2(b)));
  }
  CHECK(reciprocal_closed_set(1) == std::vector<std::uint64_t>{0x3});
  // x^3 + x + 1 times its reciprocal.
  CHECK(reciprocal_closed_set(3) == std::vector<std::uint64_t>{poly_mul(0xb, 0xd)});
}

TEST_CASE("available slots") {
  CHECK(available_slots(1, true) == 0);
  CHECK(available_slots(2, true) == 0);
  CHECK(available_slots(1, false) == 1);
  CHECK(available_slots(3, true) == 1);
  CHECK(available_slots(4, true) == 1);  // (3 - 1) / 2
  CHECK(available_slots(4, false) == 2);
}
