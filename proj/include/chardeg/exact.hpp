#pragma once

// Exact integer/rational plumbing shared by every verification path.
//
// Nothing here touches floating point. Irrational quantities are enclosed
// in rational intervals whose endpoints are dyadic rationals obtained from
// exact integer roots.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chardeg::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow(unsigned long base, unsigned long exponent);
BigInt factorial(unsigned long n);
BigInt gcd(const BigInt& a, const BigInt& b);
std::string to_string(const BigInt& n);
std::string to_string(const Rational& r);
BigInt parse_bigint(const std::string& decimal);

bool is_prime(std::uint64_t n);

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Trial-division factorization, ascending primes.
std::vector<PrimeFactor> factorize(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// q = p^f with f >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Largest power of p dividing n. Throws std::invalid_argument when n == 0
/// or p is not prime.
BigInt p_part(const BigInt& n, std::uint64_t p);

/// n with every factor p removed.
BigInt p_prime_part(const BigInt& n, std::uint64_t p);

/// Orders a^x against b^y exactly.
std::strong_ordering pow_compare(const BigInt& a, unsigned long x, const BigInt& b,
                                 unsigned long y);

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rational lo;
  Rational hi;

  static RatInterval point(const Rational& v) { return {v, v}; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
  bool strictly_positive() const { return lo > 0; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Throws std::domain_error when b contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);
RatInterval reciprocal(const RatInterval& a);

/// Encloses the real k-th root of n with width <= 2^-precision_bits.
/// Endpoints are r/2^bits and (r+1)/2^bits with r = floor(n^{1/k} 2^bits).
RatInterval root_interval(const BigInt& n, unsigned k, unsigned precision_bits);

/// Encloses sqrt(n): lo^2 <= n <= hi^2, width <= 2^-precision_bits.
RatInterval sqrt_interval(const BigInt& n, unsigned precision_bits);

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

/// Decides lhs > rhs for two enclosure families. At each precision the claim
/// holds iff lo(lhs) > hi(rhs) and fails iff hi(lhs) <= lo(rhs); otherwise
/// the precision doubles until it would exceed cap_bits.
struct IntervalClaim {
  std::function<std::pair<RatInterval, RatInterval>(unsigned bits)> evaluate;
  unsigned start_bits = 32;
  unsigned cap_bits = 4096;
};

struct ClaimOutcome {
  Verdict verdict;
  unsigned bits_used;
};

ClaimOutcome decide_greater(const IntervalClaim& claim);

}  // namespace chardeg::exact
