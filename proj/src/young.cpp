#include "chardeg/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace chardeg::young {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1) throw std::invalid_argument("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[j];
  }
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(parts_[j]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  int first = lambda.part(1);
  out.reserve(static_cast<std::size_t>(first));
  for (int i = 1; i <= first; ++i) {
    int count = 0;
    while (count < lambda.length() && lambda.part(count + 1) >= i) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& lambda) {
  // lambda is self-conjugate iff lambda_j = #{k : lambda_k >= j} for all j.
  int k = lambda.length();
  if (k != lambda.part(1)) return false;
  for (int j = 1; j <= k; ++j) {
    int count = 0;
    while (count < k && lambda.part(count + 1) >= j) ++count;
    if (count != lambda.part(j)) return false;
  }
  return true;
}

std::map<Node, int> hook_lengths(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  std::map<Node, int> out;
  for (int j = 1; j <= lambda.length(); ++j) {
    for (int i = 1; i <= lambda.part(j); ++i) {
      out.emplace(Node{i, j}, 1 + lambda.part(j) + conj.part(i) - i - j);
    }
  }
  return out;
}

BigInt hook_product(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  BigInt product = 1;
  std::uint64_t chunk = 1;
  for (int j = 1; j <= lambda.length(); ++j) {
    int row_len = lambda.part(j);
    for (int i = 1; i <= row_len; ++i) {
      auto h = static_cast<std::uint64_t>(1 + row_len + conj.part(i) - i - j);
      if (chunk > (UINT64_MAX >> 1) / h) {
        mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), chunk);
        chunk = 1;
      }
      chunk *= h;
    }
  }
  mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), chunk);
  return product;
}

BigInt hook_degree(const Partition& lambda) {
  BigInt num = exact::factorial(static_cast<unsigned long>(lambda.size()));
  BigInt den = hook_product(lambda);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BoundaryNodes boundary_nodes(const Partition& lambda) {
  BoundaryNodes out;
  int k = lambda.length();
  for (int j = 1; j <= k + 1; ++j) {
    int here = lambda.part(j);
    // Addable at the end of row j when the row above is strictly longer.
    if (j == 1 || lambda.part(j - 1) > here) out.addable.push_back({here + 1, j});
    if (j <= k && here > lambda.part(j + 1)) out.removable.push_back({here, j});
  }
  std::sort(out.addable.begin(), out.addable.end());
  std::sort(out.removable.begin(), out.removable.end());
  return out;
}

Partition add_node(const Partition& lambda, Node node) {
  int j = node.row;
  bool ok = j >= 1 && j <= lambda.length() + 1 && node.column == lambda.part(j) + 1 &&
            (j == 1 || lambda.part(j - 1) > lambda.part(j));
  if (!ok) throw std::invalid_argument("node is not addable");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (j == lambda.length() + 1)
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(j - 1)];
  return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, Node node) {
  int j = node.row;
  bool ok = j >= 1 && j <= lambda.length() && node.column == lambda.part(j) &&
            lambda.part(j) > lambda.part(j + 1);
  if (!ok) throw std::invalid_argument("node is not removable");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (--parts[static_cast<std::size_t>(j - 1)] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

namespace {

// Appends the lexicographically largest partition of `remaining` into parts
// bounded by `cap`.
void greedy_fill(std::vector<int>& parts, int remaining, int cap) {
  while (remaining > 0) {
    int p = std::min(cap, remaining);
    parts.push_back(p);
    remaining -= p;
  }
}

}  // namespace

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
}

PartitionGenerator::PartitionGenerator(int n, int first_part) : n_(n), fixed_first_(first_part) {
  if (n < 1 || first_part < 1 || first_part > n)
    throw std::invalid_argument("first part out of range");
}

bool PartitionGenerator::advance() {
  // Rightmost part exceeding 1 gets decremented; the tail is refilled greedily.
  int idx = static_cast<int>(current_.size()) - 1;
  int ones = 0;
  while (idx >= 0 && current_[static_cast<std::size_t>(idx)] == 1) {
    ++ones;
    --idx;
  }
  if (idx < 0) return false;
  if (fixed_first_ != 0 && idx == 0) return false;
  int v = --current_[static_cast<std::size_t>(idx)];
  current_.resize(static_cast<std::size_t>(idx) + 1);
  greedy_fill(current_, ones + 1, v);
  return true;
}

std::optional<Partition> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (fixed_first_ != 0) {
      current_.push_back(fixed_first_);
      greedy_fill(current_, n_ - fixed_first_, fixed_first_);
    } else {
      greedy_fill(current_, n_, n_);
    }
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(current_);
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  PartitionGenerator gen(n);
  while (auto p = gen.next()) visit(*p);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const BigInt& a = p[static_cast<std::size_t>(m - g1)];
      if (k % 2) total += a; else total -= a;
      if (g2 <= m) {
        const BigInt& b = p[static_cast<std::size_t>(m - g2)];
        if (k % 2) total += b; else total -= b;
      }
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

namespace {

std::uint64_t place_entries(const Partition& shape, std::vector<int>& filled, int placed, int n) {
  if (placed == n) return 1;
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < filled.size(); ++j) {
    int row_cap = shape.part(static_cast<int>(j) + 1);
    bool room = filled[j] < row_cap;
    bool above_ok = j == 0 || filled[j - 1] > filled[j];
    if (room && above_ok) {
      ++filled[j];
      total += place_entries(shape, filled, placed + 1, n);
      --filled[j];
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_standard_tableaux(const Partition& lambda) {
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  return place_entries(lambda, filled, 0, lambda.size());
}

}  // namespace chardeg::young
