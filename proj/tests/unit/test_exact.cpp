#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chardeg/exact.hpp"

using namespace chardeg::exact;

TEST_CASE("factorial and pow") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(pow(2ul, 100) == BigInt("1267650600228229401496703205376"));
  CHECK(pow(BigInt(-3), 3) == -27);
  CHECK(to_string(factorial(20)) == "2432902008176640000");
  CHECK(parse_bigint("-0012") == -12);
  CHECK_THROWS_AS(parse_bigint("12x"), std::invalid_argument);
}

TEST_CASE("primes against a sieve") {
  const unsigned N = 5000;
  std::vector<bool> comp(N + 1, false);
  comp[0] = comp[1] = true;
  for (unsigned i = 2; i * i <= N; ++i)
    if (!comp[i])
      for (unsigned j = i * i; j <= N; j += i) comp[j] = true;
  for (unsigned n = 0; n <= N; ++n) CHECK(is_prime(n) == !comp[n]);
}

TEST_CASE("factorize multiplies back") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (unsigned k = 0; k < e; ++k) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(factorize(360) == std::vector<PrimeFactor>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("prime powers") {
  CHECK(as_prime_power(1) == std::nullopt);
  CHECK(as_prime_power(12) == std::nullopt);
  auto q = as_prime_power(81);
  REQUIRE(q);
  CHECK(q->prime == 3);
  CHECK(q->exponent == 4);
  CHECK(as_prime_power(4096)->exponent == 12);
}

TEST_CASE("p-part properties") {
  for (unsigned long n = 1; n <= 2000; ++n)
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      BigInt pp = p_part(BigInt(n), p);
      BigInt rest = BigInt(n) / pp;
      CHECK(pp * rest == n);
      CHECK(gcd(BigInt(static_cast<unsigned long>(p)), rest) == 1);
      CHECK(p_prime_part(BigInt(n), p) == rest);
    }
  CHECK_THROWS_AS(p_part(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(p_part(12, 4), std::invalid_argument);
}

TEST_CASE("pow_compare agrees with exponentiation") {
  for (unsigned long a = 1; a <= 100; ++a)
    for (unsigned long b = 1; b <= 100; b += 3)
      for (unsigned long x = 1; x <= 10; ++x)
        for (unsigned long y = 1; y <= 10; ++y) {
          BigInt l = pow(a, x), r = pow(b, y);
          auto expect = l < r ? std::strong_ordering::less
                              : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
          REQUIRE(pow_compare(BigInt(a), x, BigInt(b), y) == expect);
        }
}

TEST_CASE("root intervals enclose and tighten") {
  for (unsigned long n : {2ul, 3ul, 10ul, 150ul, 1000001ul}) {
    RatInterval prev = sqrt_interval(BigInt(n), 8);
    for (unsigned bits : {16u, 32u, 64u, 128u}) {
      RatInterval cur = sqrt_interval(BigInt(n), bits);
      CHECK(cur.lo * cur.lo <= n);
      CHECK(cur.hi * cur.hi >= n);
      CHECK(cur.width() <= Rational(1, pow(2ul, bits)));
      CHECK(cur.width() <= prev.width());
      CHECK(cur.lo >= prev.lo);
      CHECK(cur.hi <= prev.hi);
      prev = cur;
    }
  }
  RatInterval r8 = root_interval(BigInt(76 * 76 * 76), 8, 40);
  Rational lo8 = r8.lo, hi8 = r8.hi;
  for (int i = 0; i < 3; ++i) {
    lo8 *= lo8;
    hi8 *= hi8;
  }
  CHECK(lo8 <= 76 * 76 * 76);
  CHECK(hi8 >= 76 * 76 * 76);
  CHECK(root_interval(BigInt(27), 3, 20).contains(3));
}

TEST_CASE("interval arithmetic") {
  RatInterval a{1, 2}, b{-3, 4};
  auto p = a * b;
  CHECK(p.lo == -6);
  CHECK(p.hi == 8);
  auto s = a - b;
  CHECK(s.lo == -3);
  CHECK(s.hi == 5);
  CHECK_THROWS_AS(a / b, std::domain_error);
  auto q = a / RatInterval{2, 4};
  CHECK(q.lo == Rational(1, 4));
  CHECK(q.hi == 1);
}

TEST_CASE("decide_greater") {
  IntervalClaim yes{[](unsigned bits) {
                      return std::make_pair(sqrt_interval(3, bits), RatInterval::point(Rational(17, 10)));
                    }};
  CHECK(decide_greater(yes).verdict == Verdict::holds);
  IntervalClaim no{[](unsigned bits) {
                     return std::make_pair(sqrt_interval(2, bits), RatInterval::point(Rational(3, 2)));
                   }};
  CHECK(decide_greater(no).verdict == Verdict::fails);
  // A widened enclosure of sqrt(4) always overlaps 2, so nothing is decided.
  IntervalClaim tie{[](unsigned bits) {
                      auto s = sqrt_interval(4, bits);
                      Rational eps(1, pow(2ul, bits));
                      return std::make_pair(RatInterval{s.lo - eps, s.hi + eps}, RatInterval::point(2));
                    },
                    32, 256};
  auto out = decide_greater(tie);
  CHECK(out.verdict == Verdict::inconclusive);
  CHECK(out.bits_used <= 256);
}
