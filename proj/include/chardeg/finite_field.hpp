#pragma once

// Small finite fields F_q, q = p^f <= 81, by full operation tables.
//
// An element is encoded as the integer sum c_i p^i, where the c_i are its
// coordinates in the power basis 1, a, a^2, ... of a root a of the defining
// polynomial. The default defining polynomial is the smallest monic
// irreducible of degree f in that same integer encoding of its low
// coefficients.

#include <cstdint>
#include <vector>

namespace chardeg {

class FiniteField {
 public:
  static constexpr unsigned kMaxOrder = 81;

  /// Throws std::invalid_argument unless p is prime and p^f <= 81.
  FiniteField(unsigned p, unsigned f);
  /// Explicit defining polynomial: low coefficients c_0..c_{f-1} of a monic
  /// degree-f polynomial. Throws std::invalid_argument if it is reducible.
  FiniteField(unsigned p, unsigned f, const std::vector<unsigned>& modulus_low);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  unsigned order() const { return q_; }
  const std::vector<unsigned>& modulus_low() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg_[b]); }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  /// Throws std::domain_error on zero.
  unsigned inv(unsigned a) const;
  unsigned frobenius(unsigned a) const { return frob_[a]; }
  unsigned frobenius_power(unsigned a, unsigned k) const;
  /// A generator of the multiplicative group.
  unsigned primitive_element() const { return primitive_; }
  /// The element a^i of the power basis (i < f), i.e. p^i.
  unsigned basis(unsigned i) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
  }

 private:
  bool build(const std::vector<unsigned>& modulus_low);

  unsigned p_;
  unsigned f_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_, frob_;
  unsigned primitive_ = 0;
};

}  // namespace chardeg
