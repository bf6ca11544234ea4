#include "chardeg/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "chardeg/errors.hpp"

namespace chardeg::gf2 {

namespace {

int deg(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  int dm = deg(m);
  for (int da = deg(a); da >= dm; da = deg(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  int dm = deg(m);
  std::uint64_t top = std::uint64_t{1} << dm;
  std::uint64_t out = 0;
  a = mod(a, m);
  while (b) {
    if (b & 1u) out ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod m by repeated squaring.
std::uint64_t x_pow_2k(unsigned k, std::uint64_t m) {
  std::uint64_t r = mod(2, m);
  for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, m);
  return r;
}

void check_brute_degree(unsigned d) {
  if (d > 24) throw ResourceLimitError("exhaustive polynomial enumeration is capped at degree 24");
}

}  // namespace

Poly2::Poly2(std::uint64_t bits) : bits_(bits) {
  if (bits == 0) throw std::invalid_argument("zero polynomial is not monic");
}

Poly2 Poly2::from_coeffs(const std::vector<int>& coeffs) {
  if (coeffs.empty() || coeffs.back() != 1 || coeffs.size() > 64)
    throw std::invalid_argument("coefficient list must be monic, degree <= 63");
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0 && coeffs[i] != 1) throw std::invalid_argument("coefficients must be bits");
    if (coeffs[i]) b |= std::uint64_t{1} << i;
  }
  return Poly2(b);
}

Poly2 Poly2::from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() > 16) throw std::invalid_argument("bad polynomial hex: " + hex);
  std::uint64_t b = 0;
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument("bad polynomial hex: " + hex);
    b = (b << 4) | static_cast<std::uint64_t>(v);
  }
  return Poly2(b);
}

int Poly2::degree() const { return deg(bits_); }

std::vector<int> Poly2::coeffs() const {
  std::vector<int> out(static_cast<std::size_t>(degree()) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i));
  return out;
}

std::string Poly2::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::uint64_t b = bits_;
  do {
    out.push_back(digits[b & 0xf]);
    b >>= 4;
  } while (b);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Poly2::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) out += "1";
    else if (i == 1) out += "x";
    else out += "x^" + std::to_string(i);
  }
  return out;
}

Poly2 poly_reciprocal(const Poly2& f) {
  if (!f.coeff(0)) throw std::invalid_argument("reciprocal undefined: constant term is zero");
  int n = f.degree();
  std::uint64_t r = 0;
  for (int i = 0; i <= n; ++i)
    if (f.coeff(i)) r |= std::uint64_t{1} << (n - i);
  return Poly2(r);
}

bool is_self_reciprocal(const Poly2& f) { return f.coeff(0) && poly_reciprocal(f) == f; }

bool poly_is_irreducible(const Poly2& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  std::uint64_t m = f.bits();
  if (!(m & 1u)) return false;  // divisible by x
  if (x_pow_2k(static_cast<unsigned>(n), m) != mod(2, m)) return false;
  for (const auto& pf : exact::factorize(static_cast<std::uint64_t>(n))) {
    std::uint64_t h = x_pow_2k(static_cast<unsigned>(n / static_cast<int>(pf.prime)), m) ^ mod(2, m);
    if (gcd(m, h) != 1) return false;
  }
  return true;
}

std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b && deg(a) + deg(b) > 63) throw std::overflow_error("product degree exceeds 63");
  std::uint64_t out = 0;
  for (int i = 0; b >> i; ++i)
    if ((b >> i) & 1u) out ^= a << i;
  return out;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int sign = 1;
  for (const auto& pf : exact::factorize(n)) {
    if (pf.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt count_irreducible_monic(unsigned d) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  BigInt total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(d / e);
    if (mu > 0) total += exact::pow(2, e);
    else if (mu < 0) total -= exact::pow(2, e);
  }
  return total / d;
}

std::vector<Poly2> irreducibles_of_degree(unsigned d) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  check_brute_degree(d);
  std::vector<Poly2> out;
  std::uint64_t lead = std::uint64_t{1} << d;
  for (std::uint64_t low = 0; low < lead; ++low) {
    Poly2 f(lead | low);
    if (poly_is_irreducible(f)) out.push_back(f);
  }
  return out;
}

std::uint64_t count_irreducible_brute(unsigned d) { return irreducibles_of_degree(d).size(); }

BigInt count_self_reciprocal(unsigned d, CountMode mode) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  if (mode == CountMode::formula) {
    // Meyn-Goetz closed form, specialised to q = 2.
    BigInt total = 0;
    for (unsigned e = 1; e <= d; e += 2) {
      if (d % e) continue;
      int mu = mobius(e);
      if (mu > 0) total += exact::pow(2, d / e);
      else if (mu < 0) total -= exact::pow(2, d / e);
    }
    return total / (2 * d);
  }
  if (d > 10) throw ResourceLimitError("brute-force self-reciprocal count is capped at d = 10");
  std::uint64_t count = 0;
  for (const auto& f : irreducibles_of_degree(2 * d))
    if (is_self_reciprocal(f)) ++count;
  return BigInt(static_cast<unsigned long>(count));
}

std::vector<std::uint64_t> reciprocal_closed_set(unsigned d0) {
  std::set<std::uint64_t> out;
  for (const auto& g : irreducibles_of_degree(d0)) {
    if (!g.coeff(0)) continue;
    Poly2 r = poly_reciprocal(g);
    if (r == g) out.insert(g.bits());
    else out.insert(poly_mul(g.bits(), r.bits()));
  }
  return {out.begin(), out.end()};
}

BigInt available_slots(unsigned d, bool plus) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  if (!plus) return count_self_reciprocal(d, CountMode::formula);
  BigInt n = count_irreducible_monic(d);
  if (d == 1) n -= 2;  // x and x+1 carry eigenvalues 0 and 1
  if (d % 2 == 0) n -= count_self_reciprocal(d / 2, CountMode::formula);
  return n / 2;
}

}  // namespace chardeg::gf2
