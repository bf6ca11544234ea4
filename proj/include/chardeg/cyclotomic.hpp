#pragma once

// Exact elements of Z[zeta_n], zeta_n = exp(2 pi i / n), stored sparsely as
// (exponent, coefficient) terms. Equality is decided by reduction modulo the
// n-th cyclotomic polynomial.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chardeg::cyclo {

/// Coefficients of Phi_n, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n);

class Cyclo {
 public:
  Cyclo() = default;
  /// The constant c in Q(zeta_n).
  Cyclo(unsigned n, std::int64_t c);
  /// zeta_n^k.
  static Cyclo root(unsigned n, std::int64_t k);
  /// sum_k coeffs[k] zeta_n^k; coeffs may be shorter than n.
  static Cyclo from_dense(unsigned n, const std::vector<std::int64_t>& coeffs);

  unsigned conductor() const { return n_; }
  const std::vector<std::pair<unsigned, std::int64_t>>& terms() const { return terms_; }

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(std::int64_t c) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  /// Complex conjugate: zeta^k -> zeta^{-k}.
  Cyclo conj() const;

  /// Canonical coordinates in the basis 1, zeta, ..., zeta^{phi(n)-1}.
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  bool operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

  /// "2*E(5)^2 + E(5)^3" style; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  void check_same(const Cyclo& o) const;

  unsigned n_ = 1;
  std::vector<std::pair<unsigned, std::int64_t>> terms_;
};

}  // namespace chardeg::cyclo
