#include "chardeg/exact.hpp"

#include <stdexcept>

namespace chardeg::exact {

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& r) { return r.get_str(10); }

BigInt parse_bigint(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = decimal[0] == '-' ? 1 : 0;
  if (start == decimal.size()) throw std::invalid_argument("bad integer literal: " + decimal);
  for (std::size_t i = start; i < decimal.size(); ++i) {
    if (decimal[i] < '0' || decimal[i] > '9')
      throw std::invalid_argument("bad integer literal: " + decimal);
  }
  return BigInt(decimal, 10);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<PrimeFactor> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].prime, f[0].exponent};
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  if (n <= 0) throw std::invalid_argument("p_part: n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p_part: " + std::to_string(p) + " is not prime");
  BigInt rest = n;
  BigInt part = 1;
  BigInt prime(static_cast<unsigned long>(p));
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    rest /= prime;
    part *= prime;
  }
  return part;
}

BigInt p_prime_part(const BigInt& n, std::uint64_t p) { return n / p_part(n, p); }

std::strong_ordering pow_compare(const BigInt& a, unsigned long x, const BigInt& b,
                                 unsigned long y) {
  if (a < 1 || b < 1 || x < 1 || y < 1)
    throw std::invalid_argument("pow_compare: bases and exponents must be >= 1");
  int c = cmp(pow(a, x), pow(b, y));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RatInterval out{c[0], c[0]};
  for (const auto& v : c) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

RatInterval reciprocal(const RatInterval& a) {
  if (a.lo <= 0 && a.hi >= 0) throw std::domain_error("reciprocal of an interval containing 0");
  return {1 / a.hi, 1 / a.lo};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) { return a * reciprocal(b); }

RatInterval root_interval(const BigInt& n, unsigned k, unsigned precision_bits) {
  if (n < 0) throw std::invalid_argument("root_interval: negative radicand");
  if (k == 0) throw std::invalid_argument("root_interval: zero root index");
  BigInt scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
               static_cast<mp_bitcnt_t>(precision_bits) * k);
  BigInt r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k);
  BigInt denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), precision_bits);
  Rational lo(r, denom);
  lo.canonicalize();
  // Exact roots collapse to a point.
  if (pow(r, k) == scaled) return {lo, lo};
  Rational hi(r + 1, denom);
  hi.canonicalize();
  return {lo, hi};
}

RatInterval sqrt_interval(const BigInt& n, unsigned precision_bits) {
  return root_interval(n, 2, precision_bits);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ClaimOutcome decide_greater(const IntervalClaim& claim) {
  unsigned bits = claim.start_bits == 0 ? 1 : claim.start_bits;
  while (true) {
    auto [lhs, rhs] = claim.evaluate(bits);
    if (lhs.lo > rhs.hi) return {Verdict::holds, bits};
    if (lhs.hi <= rhs.lo) return {Verdict::fails, bits};
    if (bits * 2 > claim.cap_bits) return {Verdict::inconclusive, bits};
    bits *= 2;
  }
}

}  // namespace chardeg::exact
