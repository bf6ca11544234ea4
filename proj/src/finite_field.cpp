#include "chardeg/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "chardeg/exact.hpp"

namespace chardeg {

namespace {

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<unsigned> digits(unsigned x, unsigned p, unsigned f) {
  std::vector<unsigned> d(f);
  for (unsigned i = 0; i < f; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

void check_params(unsigned p, unsigned f) {
  if (!exact::is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("field degree must be >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder)
      throw std::invalid_argument("field order exceeds " + std::to_string(FiniteField::kMaxOrder));
  }
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned f) : p_(p), f_(f), q_(0) {
  check_params(p, f);
  q_ = ipow(p, f);
  for (unsigned code = 0; code < ipow(p, f); ++code) {
    if (build(digits(code, p, f))) return;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(unsigned p, unsigned f, const std::vector<unsigned>& modulus_low)
    : p_(p), f_(f), q_(0) {
  check_params(p, f);
  q_ = ipow(p, f);
  if (modulus_low.size() != f) throw std::invalid_argument("modulus must have f low coefficients");
  for (unsigned c : modulus_low)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!build(modulus_low)) throw std::invalid_argument("defining polynomial is reducible");
}

bool FiniteField::build(const std::vector<unsigned>& low) {
  const unsigned q = q_;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p_, f_);
    std::vector<unsigned> dn(f_);
    for (unsigned i = 0; i < f_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p_, f_);
      std::vector<unsigned> ds(f_);
      for (unsigned i = 0; i < f_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(ds, p_);
      // Schoolbook product, then reduce x^k for k >= f using x^f = -sum low_i x^i.
      std::vector<unsigned> prod(2 * f_ - 1, 0);
      for (unsigned i = 0; i < f_; ++i)
        for (unsigned j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned k = 2 * f_ - 2; k >= f_ && k < prod.size(); --k) {
        unsigned c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < f_; ++i)
          prod[k - f_ + i] = (prod[k - f_ + i] + (p_ - low[i]) * c) % p_;
      }
      prod.resize(f_);
      mul_[a * q + b] = undigits(prod, p_);
    }
  }
  // The quotient ring is a field iff it has no zero divisors.
  inv_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      unsigned c = mul_[a * q + b];
      if (c == 0) return false;
      if (c == 1) inv_[a] = b;
    }
  }
  modulus_ = low;
  frob_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    unsigned r = 1;
    for (unsigned i = 0; i < p_; ++i) r = mul_[r * q + a];
    frob_[a] = r;
  }
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g, ord = 1;
    while (x != 1) {
      x = mul_[x * q + g];
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
  return true;
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  return inv_[a];
}

unsigned FiniteField::frobenius_power(unsigned a, unsigned k) const {
  for (unsigned i = 0; i < k % f_; ++i) a = frob_[a];
  return a;
}

unsigned FiniteField::basis(unsigned i) const {
  if (i >= f_) throw std::out_of_range("basis index");
  return ipow(p_, i);
}

}  // namespace chardeg
