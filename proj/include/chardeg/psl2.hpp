#pragma once

// Character degree data of PSL2(q) (= SL2(q) when q is even), field
// automorphism invariance of the chi_i / theta_j families, and the two
// extendibility facts used for b(G) estimates.

#include <cstdint>
#include <string>
#include <vector>

#include "chardeg/degree_multiset.hpp"
#include "chardeg/exact.hpp"

namespace chardeg::psl2 {

using exact::BigInt;

enum class Family { trivial, steinberg, chi, theta, xi, eta };

std::string to_string(Family f);

struct Psl2Char {
  std::uint64_t q = 0;
  Family family = Family::trivial;
  std::uint64_t index = 0;  // i, j, or 1|2 for xi/eta; 0 otherwise

  BigInt degree() const;
  std::string to_string() const;
  friend bool operator==(const Psl2Char&, const Psl2Char&) = default;
};

/// q(q^2-1)/gcd(2, q-1).
BigInt psl2_order(std::uint64_t q);

/// Full list in family order. Throws std::invalid_argument unless q >= 4 is
/// a prime power.
std::vector<Psl2Char> psl2_characters(std::uint64_t q);
DegreeMultiset psl2_degrees(std::uint64_t q);

/// Invariance of chi_i or theta_j under phi^k, phi the Frobenius of F_q.
/// Throws UnsupportedFamilyError for the other families and
/// std::invalid_argument for k outside [1, f].
bool field_invariance(const Psl2Char& c, unsigned k);

/// theta_{(q+1)/3} for odd f, chi_{(q-1)/3} for even f; q = 2^f, f >= 3.
Psl2Char extendible_witness_even(std::uint64_t q);

struct StabilizerReport {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned f = 0;
  std::vector<unsigned> checked;     // k = 1 .. f-1
  std::vector<unsigned> offending;   // k where a divisibility holds
  unsigned index_in_aut = 0;         // [Aut : Stab(theta_2)] when passed
  bool passed() const { return offending.empty(); }
};

/// For odd q = p^f >= 5: for 1 <= k < f neither (q+1) | 2(p^k-1) nor
/// (q+1) | 2(p^k+1). Throws std::invalid_argument for even q.
StabilizerReport theta2_stabilizer_odd(std::uint64_t q);

}  // namespace chardeg::psl2
