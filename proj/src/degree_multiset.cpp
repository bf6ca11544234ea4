#include "chardeg/degree_multiset.hpp"

#include <stdexcept>

namespace chardeg {

DegreeMultiset::DegreeMultiset(const std::vector<std::pair<BigInt, std::uint64_t>>& entries) {
  for (const auto& [d, m] : entries) add(d, m);
}

void DegreeMultiset::add(const BigInt& degree, std::uint64_t multiplicity) {
  if (degree < 1) throw std::invalid_argument("character degree must be >= 1");
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be >= 1");
  entries_[degree] += multiplicity;
}

void DegreeMultiset::merge(const DegreeMultiset& other) {
  for (const auto& [d, m] : other.entries_) entries_[d] += m;
}

std::uint64_t DegreeMultiset::multiplicity(const BigInt& degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t DegreeMultiset::character_count() const {
  std::uint64_t total = 0;
  for (const auto& [d, m] : entries_) total += m;
  return total;
}

const BigInt& DegreeMultiset::max_degree() const {
  if (entries_.empty()) throw std::logic_error("max_degree of an empty degree multiset");
  return entries_.begin()->first;
}

BigInt DegreeMultiset::sum_of_squares() const {
  BigInt total = 0;
  for (const auto& [d, m] : entries_) total += d * d * BigInt(static_cast<unsigned long>(m));
  return total;
}

std::string DegreeMultiset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, m] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += d.get_str() + ":" + std::to_string(m);
  }
  return out + "}";
}

}  // namespace chardeg
