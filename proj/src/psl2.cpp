#include "chardeg/psl2.hpp"

#include <stdexcept>

#include "chardeg/errors.hpp"

namespace chardeg::psl2 {

namespace {

exact::PrimePower require_prime_power(std::uint64_t q) {
  auto pp = exact::as_prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return *pp;
}

bool divides(const BigInt& a, const BigInt& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::trivial:
      return "1";
    case Family::steinberg:
      return "St";
    case Family::chi:
      return "chi";
    case Family::theta:
      return "theta";
    case Family::xi:
      return "xi";
    case Family::eta:
      return "eta";
  }
  return "?";
}

BigInt Psl2Char::degree() const {
  BigInt Q(static_cast<unsigned long>(q));
  switch (family) {
    case Family::trivial:
      return 1;
    case Family::steinberg:
      return Q;
    case Family::chi:
      return Q + 1;
    case Family::theta:
      return Q - 1;
    case Family::xi:
      return (Q + 1) / 2;
    case Family::eta:
      return (Q - 1) / 2;
  }
  return 0;
}

std::string Psl2Char::to_string() const {
  std::string s = psl2::to_string(family);
  if (index != 0) s += "_" + std::to_string(index);
  return s;
}

BigInt psl2_order(std::uint64_t q) {
  BigInt Q(static_cast<unsigned long>(q));
  BigInt o = Q * (Q * Q - 1);
  return q % 2 ? o / 2 : o;
}

std::vector<Psl2Char> psl2_characters(std::uint64_t q) {
  if (q < 4) throw std::invalid_argument("PSL2(q) degree list needs q >= 4");
  require_prime_power(q);
  std::vector<Psl2Char> out;
  out.push_back({q, Family::trivial, 0});
  out.push_back({q, Family::steinberg, 0});
  if (q % 2 == 0) {
    for (std::uint64_t i = 1; i <= (q - 2) / 2; ++i) out.push_back({q, Family::chi, i});
    for (std::uint64_t j = 1; j <= q / 2; ++j) out.push_back({q, Family::theta, j});
    return out;
  }
  for (std::uint64_t i = 2; i <= (q - 3) / 2; i += 2) out.push_back({q, Family::chi, i});
  for (std::uint64_t j = 2; j <= (q - 1) / 2; j += 2) out.push_back({q, Family::theta, j});
  Family pair = q % 4 == 1 ? Family::xi : Family::eta;
  out.push_back({q, pair, 1});
  out.push_back({q, pair, 2});
  return out;
}

DegreeMultiset psl2_degrees(std::uint64_t q) {
  DegreeMultiset out;
  for (const auto& c : psl2_characters(q)) out.add(c.degree());
  return out;
}

bool field_invariance(const Psl2Char& c, unsigned k) {
  if (c.family != Family::chi && c.family != Family::theta)
    throw UnsupportedFamilyError("no field-automorphism criterion for family " +
                                 to_string(c.family));
  auto [p, f] = require_prime_power(c.q);
  if (k < 1 || k > f)
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " +
                                std::to_string(f) + "]");
  BigInt Q(static_cast<unsigned long>(c.q));
  BigInt modulus = c.family == Family::chi ? BigInt(Q - 1) : BigInt(Q + 1);
  BigInt pk = exact::pow(static_cast<unsigned long>(p), k);
  BigInt idx(static_cast<unsigned long>(c.index));
  return divides(modulus, idx * (pk - 1)) || divides(modulus, idx * (pk + 1));
}

Psl2Char extendible_witness_even(std::uint64_t q) {
  auto [p, f] = require_prime_power(q);
  if (p != 2) throw std::invalid_argument("extendible_witness_even needs q a power of 2");
  if (f < 3) throw std::invalid_argument("extendible_witness_even needs f >= 3");
  if (f % 2) return {q, Family::theta, (q + 1) / 3};
  return {q, Family::chi, (q - 1) / 3};
}

StabilizerReport theta2_stabilizer_odd(std::uint64_t q) {
  auto [p, f] = require_prime_power(q);
  if (p == 2) throw std::invalid_argument("theta2_stabilizer_odd needs odd q");
  if (q < 5) throw std::invalid_argument("theta2_stabilizer_odd needs q >= 5");
  StabilizerReport rep;
  rep.q = q;
  rep.p = p;
  rep.f = f;
  BigInt modulus = BigInt(static_cast<unsigned long>(q)) + 1;
  for (unsigned k = 1; k < f; ++k) {
    rep.checked.push_back(k);
    BigInt pk = exact::pow(static_cast<unsigned long>(p), k);
    if (divides(modulus, 2 * (pk - 1)) || divides(modulus, 2 * (pk + 1)))
      rep.offending.push_back(k);
  }
  if (rep.passed()) rep.index_in_aut = f;
  return rep;
}

}  // namespace chardeg::psl2
