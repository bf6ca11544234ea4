#pragma once

// Partitions and Young diagrams.
//
// Node coordinates are (column, row), both 1-based: (i, j) lies in the
// diagram of lambda iff i <= lambda_j. Hook lengths are therefore
// h(i, j) = 1 + lambda_j + conj(lambda)_i - i - j.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chardeg/exact.hpp"

namespace chardeg::young {

using exact::BigInt;

struct Node {
  int column;  // i
  int row;     // j
  auto operator<=>(const Node&) const = default;
};

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// lambda_j for 1-based j; zero past the last part.
  int part(int j) const {
    return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j - 1)] : 0;
  }
  bool contains(Node n) const { return n.row >= 1 && n.column >= 1 && n.column <= part(n.row); }

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

std::map<Node, int> hook_lengths(const Partition& lambda);
/// Product of all hook lengths.
BigInt hook_product(const Partition& lambda);
/// n! / prod h(i, j).
BigInt hook_degree(const Partition& lambda);

struct BoundaryNodes {
  std::vector<Node> addable;    // A(lambda)
  std::vector<Node> removable;  // R(lambda)
};

BoundaryNodes boundary_nodes(const Partition& lambda);

/// Throws std::invalid_argument if the node is not addable/removable.
Partition add_node(const Partition& lambda, Node node);
Partition remove_node(const Partition& lambda, Node node);

/// Streams the partitions of n in lexicographically decreasing order of part
/// sequences, optionally restricted to a fixed first part.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n);
  PartitionGenerator(int n, int first_part);

  std::optional<Partition> next();

 private:
  bool advance();

  int n_;
  int fixed_first_ = 0;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n, by the pentagonal-number recurrence.
BigInt partition_count(int n);

/// Number of standard Young tableaux of the given shape, by backtracking
/// placement of 1..n into addable cells. Independent of the hook formula.
std::uint64_t count_standard_tableaux(const Partition& lambda);

}  // namespace chardeg::young
