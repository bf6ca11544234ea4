#pragma once

// Degrees of S_n and A_n, the extendible-degree invariant rho(A_n), and the
// growth checks rho(A_n) > (n!/2)^{3/8}.

#include <string>
#include <vector>

#include "chardeg/degree_multiset.hpp"
#include "chardeg/exact.hpp"
#include "chardeg/young.hpp"

namespace chardeg::symalt {

using exact::BigInt;

inline constexpr int kMaxDirectN = 60;

/// Throws ResourceLimitError outside 1 <= n <= 60.
DegreeMultiset sn_degrees(int n, unsigned jobs = 1);
DegreeMultiset an_degrees(int n, unsigned jobs = 1);

struct RhoValue {
  BigInt rho;
  young::Partition attained_by;  // lexicographically largest maximizer
};

/// max hook_degree over non-self-conjugate partitions of n, 5 <= n <= 60.
RhoValue rho_an_detail(int n, unsigned jobs = 1);
inline BigInt rho_an(int n, unsigned jobs = 1) { return rho_an_detail(n, jobs).rho; }

/// rho^8 * 2^3 > (n!)^3, exactly.
bool rho_direct_holds(int n, const BigInt& rho);

// The three inequalities the induction step for large n relies on.
enum class Growth {
  quotient,    // (n+1)/(sqrt(2n)+1) > (n+1)^{3/8}
  difference,  // (n+1-sqrt(2n+2))/sqrt(2n) > (n+1)^{3/8}
  refined,     // (n+2-sqrt(2n+2)-sqrt(2n) n^{-3/8})/sqrt(2n) > (n+1)^{3/8}
};

inline constexpr Growth kAllGrowth[] = {Growth::quotient, Growth::difference, Growth::refined};

std::string to_string(Growth g);

/// Interval evaluation of one inequality at n >= 1.
exact::ClaimOutcome check_growth(Growth g, long n, unsigned cap_bits = 4096);

struct GrowthWitness {
  long n;
  Growth inequality;
  exact::Verdict verdict;
};

struct RhoGrowthReport {
  int direct_min = 7;
  int direct_max = 0;
  std::vector<RhoValue> direct_values;       // index n - direct_min
  std::vector<int> direct_failures;
  long induct_min = 75;
  long induct_max = 0;
  std::vector<long> spot_checks;
  std::vector<GrowthWitness> induct_failures;  // fails and inconclusive
  long induct_checked = 0;
  // n strictly between direct_max and induct_min: informational only.
  std::vector<long> gap_all_hold;
  std::vector<GrowthWitness> gap_failures;

  bool passed() const { return direct_failures.empty() && induct_failures.empty(); }
};

/// Throws ResourceLimitError when n_direct_max > 60.
RhoGrowthReport verify_rho_growth(int n_direct_max, long n_induct_max,
                                  std::vector<long> spot_checks = {1000000},
                                  unsigned jobs = 1);

}  // namespace chardeg::symalt
