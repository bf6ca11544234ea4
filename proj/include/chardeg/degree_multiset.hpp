#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chardeg/exact.hpp"

namespace chardeg {

using exact::BigInt;
using exact::Rational;

/// Irreducible character degrees with multiplicities, keyed by decreasing
/// degree. Equal degrees are always merged.
class DegreeMultiset {
 public:
  using Map = std::map<BigInt, std::uint64_t, std::greater<>>;

  DegreeMultiset() = default;
  /// Throws std::invalid_argument on a degree < 1 or multiplicity 0.
  explicit DegreeMultiset(const std::vector<std::pair<BigInt, std::uint64_t>>& entries);

  void add(const BigInt& degree, std::uint64_t multiplicity = 1);
  void merge(const DegreeMultiset& other);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t multiplicity(const BigInt& degree) const;
  std::uint64_t character_count() const;

  /// Largest degree; throws std::logic_error on an empty multiset.
  const BigInt& max_degree() const;
  /// Sum of d^2 * mult.
  BigInt sum_of_squares() const;

  /// "{d:m, ...}" in decreasing degree order.
  std::string to_string() const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  Map entries_;
};

}  // namespace chardeg
