#pragma once

// Arithmetic of the e-invariant: |G| = d(d+e), the e^4 - e^3 bound, the
// epsilon invariant of a degree multiset, the composition bound for
// extensions, and the relations satisfied by Gagola pairs.

#include <cstdint>
#include <optional>

#include "chardeg/degree_multiset.hpp"
#include "chardeg/exact.hpp"

namespace chardeg::bounds {

using exact::BigInt;
using exact::Rational;

struct EDecomposition {
  BigInt order;
  BigInt d;
  BigInt e;
};

/// Throws std::invalid_argument unless d >= 1, d | order and d^2 <= order.
EDecomposition e_of(const BigInt& order, const BigInt& d);

struct E4Report {
  bool holds;
  BigInt slack;  // e^4 - e^3 - order
};

/// Throws OutOfHypothesisError when e <= 1.
E4Report verify_e4_bound(const EDecomposition& dec);

/// Sum of d^2 * mult over d < b, divided by b^2. Throws std::invalid_argument
/// on an empty multiset.
Rational epsilon_of(const DegreeMultiset& ds);

struct SimpleBoundReport {
  BigInt b;
  BigInt order;
  bool gt_2b2 = false;            // order > 2 b^2
  std::optional<BigInt> e_at_b;   // unset when b does not divide order
  std::optional<bool> lt_2e2;     // order < 2 e^2, when e_at_b is set
  Rational epsilon;
  bool epsilon_gt_1 = false;
  // epsilon > 1 implies e > b and then both inequalities.
  bool implication_holds = false;
};

SimpleBoundReport simple_bound_report(const DegreeMultiset& ds);

struct CompositionReport {
  BigInt order;
  BigInt e_min;
  bool exceeds_2sqrt;  // e_min^2 > 4 bN bQ
};

/// Throws OutOfHypothesisError when eN or eQ is zero and
/// std::invalid_argument when bN or bQ is zero.
CompositionReport composition_bound(const BigInt& bN, const BigInt& eN, const BigInt& bQ,
                                    const BigInt& eQ);

struct GagolaArithmetic {
  BigInt e;
  bool index_is_e_squared;  // |P:N| = e^2
  bool degree_relation;     // d = e(|N| - 1)
  bool equality_iff;        // (order = e^4 - e^3) iff |N| = e
  bool complement_relation; // |G:P| = |N| - 1
  bool passed() const {
    return index_is_e_squared && degree_relation && equality_iff && complement_relation;
  }
};

/// Throws std::invalid_argument when n_order is not a positive power of p,
/// sylow_p is not the p-part of order, or e_of rejects (order, d).
GagolaArithmetic gagola_arithmetic(const BigInt& order, const BigInt& d, const BigInt& n_order,
                                   std::uint64_t p, const BigInt& sylow_p);

}  // namespace chardeg::bounds
