#pragma once

// Polynomials over F_2 packed into 64-bit words: bit i is the coefficient of
// x^i. Degrees up to 63 are representable, which covers every enumeration
// in scope (the largest is degree 20).

#include <cstdint>
#include <string>
#include <vector>

#include "chardeg/exact.hpp"

namespace chardeg::gf2 {

using exact::BigInt;

class Poly2 {
 public:
  /// Throws std::invalid_argument on the zero word.
  explicit Poly2(std::uint64_t bits);
  /// Constant term first; the last entry must be 1.
  static Poly2 from_coeffs(const std::vector<int>& coeffs);
  static Poly2 from_hex(const std::string& hex);

  std::uint64_t bits() const { return bits_; }
  int degree() const;
  bool coeff(int i) const { return i >= 0 && i < 64 && ((bits_ >> i) & 1u); }
  std::vector<int> coeffs() const;

  std::string to_hex() const;
  std::string to_string() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;
  friend auto operator<=>(const Poly2&, const Poly2&) = default;

 private:
  std::uint64_t bits_;
};

/// Coefficient reversal. Throws std::invalid_argument when f(0) = 0.
Poly2 poly_reciprocal(const Poly2& f);
bool is_self_reciprocal(const Poly2& f);

/// Rabin's test. Degree 0 is not irreducible.
bool poly_is_irreducible(const Poly2& f);

/// Product as a raw word; throws std::overflow_error past degree 63.
std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b);

int mobius(std::uint64_t n);

/// (1/d) sum_{e | d} mu(d/e) 2^e.
BigInt count_irreducible_monic(unsigned d);
/// Exhaustive count, d <= 24.
std::uint64_t count_irreducible_brute(unsigned d);
/// All monic irreducibles of degree d in increasing bit order, d <= 24.
std::vector<Poly2> irreducibles_of_degree(unsigned d);

enum class CountMode { formula, brute_force };

/// S_2(d): self-reciprocal monic irreducibles of degree 2d. brute_force is
/// limited to d <= 10 (ResourceLimitError beyond).
BigInt count_self_reciprocal(unsigned d, CountMode mode);

/// The set F_{d0}: products g * reciprocal(g) over irreducible g != reciprocal(g)
/// of degree d0, together with self-reciprocal irreducibles of degree d0.
std::vector<std::uint64_t> reciprocal_closed_set(unsigned d0);

/// Number of distinct elementary-divisor slots available for a factor
/// GL_k^eps(2^d) of a semisimple centralizer: eps = + needs a pair {g, g~}
/// of degree d with g != g~ and g not in {x, x+1}; eps = - needs a
/// self-reciprocal irreducible of degree 2d.
BigInt available_slots(unsigned d, bool plus);

}  // namespace chardeg::gf2
