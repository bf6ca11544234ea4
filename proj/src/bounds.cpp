#include "chardeg/bounds.hpp"

#include <stdexcept>

#include "chardeg/errors.hpp"

namespace chardeg::bounds {

EDecomposition e_of(const BigInt& order, const BigInt& d) {
  if (d < 1 || order < 1) throw std::invalid_argument("order and d must be positive");
  if (order % d != 0)
    throw std::invalid_argument(exact::to_string(d) + " does not divide " + exact::to_string(order));
  if (d * d > order) throw std::invalid_argument("d^2 exceeds the order");
  BigInt q = order / d;
  return {order, d, q - d};
}

E4Report verify_e4_bound(const EDecomposition& dec) {
  if (dec.e <= 1) throw OutOfHypothesisError("the e^4 - e^3 bound needs e > 1");
  BigInt e3 = dec.e * dec.e * dec.e;
  BigInt slack = e3 * dec.e - e3 - dec.order;
  return {slack >= 0, slack};
}

Rational epsilon_of(const DegreeMultiset& ds) {
  if (ds.empty()) throw std::invalid_argument("epsilon of an empty degree multiset");
  const BigInt& b = ds.max_degree();
  BigInt below = 0;
  for (const auto& [d, m] : ds.entries())
    if (d < b) below += d * d * static_cast<unsigned long>(m);
  Rational r(below, b * b);
  r.canonicalize();
  return r;
}

SimpleBoundReport simple_bound_report(const DegreeMultiset& ds) {
  SimpleBoundReport rep;
  rep.b = ds.max_degree();
  rep.order = ds.sum_of_squares();
  rep.gt_2b2 = rep.order > 2 * rep.b * rep.b;
  if (rep.order % rep.b == 0) {
    BigInt e = e_of(rep.order, rep.b).e;
    rep.lt_2e2 = rep.order < 2 * e * e;
    rep.e_at_b = std::move(e);
  }
  rep.epsilon = epsilon_of(ds);
  rep.epsilon_gt_1 = rep.epsilon > 1;
  rep.implication_holds =
      !rep.epsilon_gt_1 || (rep.gt_2b2 && rep.e_at_b && *rep.e_at_b > rep.b && rep.lt_2e2.value_or(false));
  return rep;
}

CompositionReport composition_bound(const BigInt& bN, const BigInt& eN, const BigInt& bQ,
                                    const BigInt& eQ) {
  if (bN < 1 || bQ < 1) throw std::invalid_argument("b values must be positive");
  if (eN < 1 || eQ < 1)
    throw OutOfHypothesisError("the composition bound needs both e values positive");
  CompositionReport rep;
  rep.order = bN * bQ * (bN + eN) * (bQ + eQ);
  rep.e_min = eN * eQ + eN * bQ + bN * eQ;
  rep.exceeds_2sqrt = rep.e_min * rep.e_min > 4 * bN * bQ;
  return rep;
}

GagolaArithmetic gagola_arithmetic(const BigInt& order, const BigInt& d, const BigInt& n_order,
                                   std::uint64_t p, const BigInt& sylow_p) {
  if (!exact::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n_order < p || exact::p_part(n_order, p) != n_order)
    throw std::invalid_argument("|N| must be a positive power of p");
  if (exact::p_part(order, p) != sylow_p)
    throw std::invalid_argument("sylow_p must be the p-part of the order");
  GagolaArithmetic r;
  r.e = e_of(order, d).e;
  BigInt e3 = r.e * r.e * r.e;
  r.index_is_e_squared = sylow_p % n_order == 0 && sylow_p / n_order == r.e * r.e;
  r.degree_relation = d == r.e * (n_order - 1);
  r.equality_iff = (order == e3 * r.e - e3) == (n_order == r.e);
  r.complement_relation = order / sylow_p == n_order - 1;
  return r;
}

}  // namespace chardeg::bounds
