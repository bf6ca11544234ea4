#pragma once

// Finite simple groups of Lie type: orders, Steinberg degrees, the 3/8
// Steinberg test, the Seitz-type bound b(S) <= |G:T|_{q'}, and the
// semisimple-centralizer degree calculus for SL_n(2), Sp_2n(2), Omega_2n(2).

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chardeg/exact.hpp"

namespace chardeg::lie {

using exact::BigInt;
using exact::Rational;

enum class Family {
  A, twistedA, B, C, D, twistedD, G2, F4, E6, twistedE6, E7, E8,
  twistedB2, twistedG2, twistedF4, triality3D4
};

inline constexpr Family kAllFamilies[] = {
    Family::A,  Family::twistedA,  Family::B,  Family::C,         Family::D,
    Family::twistedD, Family::G2,  Family::F4, Family::E6,        Family::twistedE6,
    Family::E7, Family::E8, Family::twistedB2, Family::twistedG2, Family::twistedF4,
    Family::triality3D4};

/// Short names: "A", "2A", ..., "3D4".
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// Rank is the index in the Lie notation: A_n(q) = PSL_{n+1}(q), 2A_n(q) =
/// PSU_{n+1}(q), D_n(q) = POmega+_{2n}(q). Twisted rank-fixed families use
/// the rank of the untwisted type (2B2: 2, 2G2: 2, 2F4: 4, 3D4: 4, 2E6: 6).
struct SimpleGroupId {
  Family family;
  unsigned rank;
  std::uint64_t q;

  std::string to_string() const;
  friend bool operator==(const SimpleGroupId&, const SimpleGroupId&) = default;
};

/// Throws std::invalid_argument for bad parameters and for the non-simple
/// cases A1(2), A1(3), 2A2(2), B2(2), C2(2), G2(2), 2B2(2), 2G2(3), 2F4(2).
void validate(const SimpleGroupId& id);
bool is_valid(const SimpleGroupId& id);

std::uint64_t characteristic(const SimpleGroupId& id);

/// Order of the simple group.
BigInt simple_order(const SimpleGroupId& id);
/// Order of the simply connected group (no centre quotient).
BigInt sc_order(const SimpleGroupId& id);
BigInt steinberg_degree(const SimpleGroupId& id);

/// St(1)^8 > |S|^3. Throws ExcludedCaseError for A1.
bool verify_lie_38(const SimpleGroupId& id);

/// Every valid id with rank <= max_rank and prime power q <= max_q.
std::vector<SimpleGroupId> lie_grid(unsigned max_rank, std::uint64_t max_q);

// ---- Seitz-type bound ----

/// Key "family/rank/q" -> torus order.
using TorusTable = std::map<std::string, BigInt>;

std::string torus_key(const SimpleGroupId& id);
/// Throws ConfigError on unreadable or malformed files.
TorusTable load_torus_table(const std::string& path);

/// (q-1)^rank; only for untwisted families A, B, C, D.
BigInt split_torus_order(const SimpleGroupId& id);
bool is_untwisted_classical(Family f);

/// The finite list with rank above 8: PSL_n(3) and PSU_n(2) for 9 <= n <= 14,
/// PSp_2n(3) and Omega_{2n+1}(3) for 9 <= n <= 17, POmega^pm_2n(3) for
/// 9 <= n <= 30.
std::vector<SimpleGroupId> seitz_list();
bool in_seitz_list(const SimpleGroupId& id);

struct SeitzReport {
  BigInt bound;     // q'-part of |G_sc| / |T|
  bool passes_2b2;  // |S| > 2 bound^2
};

/// Throws std::invalid_argument outside the list or when torus_order does
/// not divide the simply connected order.
SeitzReport seitz_check(const SimpleGroupId& id, const BigInt& torus_order);

// ---- Centralizer shapes over F_2 ----

enum class Ambient { SL, Sp, OmegaPlus, OmegaMinus };
enum class KKind { none, Sp, OmegaPlus, OmegaMinus };

std::string to_string(Ambient a);

/// GL_k^eps(2^d); eps = -1 means GU_k(2^d).
struct ClassicalFactor {
  unsigned d;
  unsigned k;
  int eps;
  friend bool operator==(const ClassicalFactor&, const ClassicalFactor&) = default;
};

struct CentralizerShape {
  Ambient ambient;
  unsigned n;
  KKind kkind = KKind::none;
  unsigned m = 0;
  std::vector<ClassicalFactor> factors;

  std::string to_string() const;
  friend bool operator==(const CentralizerShape&, const CentralizerShape&) = default;
};

/// Structural checks: dimension sum, K kind against ambient, and the sign
/// rule eps(ambient) = beta * prod eps_i^{k_i} for orthogonal ambients.
/// Throws std::invalid_argument naming the violation.
void validate(const CentralizerShape& s);

/// The polynomial-count constraint over F_2: distinct factors of type
/// (d, eps) cannot outnumber the available elementary divisors.
bool is_realizable(const CentralizerShape& s);

/// Sorted by d*k descending, then d descending, then + before -.
CentralizerShape canonical(CentralizerShape s);

BigInt gl_order(unsigned k, unsigned d, int eps);
BigInt ambient_order(Ambient a, unsigned n);
BigInt ambient_steinberg(Ambient a, unsigned n);
BigInt centralizer_order(const CentralizerShape& s);
BigInt centralizer_steinberg(const CentralizerShape& s);
/// [S : C]_{2'} * St_C(1).
BigInt semisimple_degree(const CentralizerShape& s);

enum class Situation { i, ii, iii, iv };
std::string to_string(Situation s);

/// The shape of the centralizer of t built from s by combining factors i
/// and j (1-based, canonical order). Throws std::invalid_argument naming the
/// failed applicability condition.
CentralizerShape situation_shape(const CentralizerShape& s, unsigned i, unsigned j,
                                 Situation sit);
/// semisimple_degree(t) / semisimple_degree(s).
Rational situation_ratio(const CentralizerShape& s, unsigned i, unsigned j, Situation sit);
/// 81/320 for (i)-(iii), 81/272 for (iv).
Rational situation_threshold(Situation sit);

struct SituationInstance {
  CentralizerShape shape;  // canonical
  unsigned i;
  unsigned j;
  Situation situation;
};

/// All realizable orthogonal shapes with exactly r factors, each d*k <= max_dk,
/// together with every applicable (pair, situation) whose t-shape is also
/// realizable.
std::vector<SituationInstance> enumerate_situations(unsigned n, unsigned r, unsigned max_dk);

/// A uniformly drawn realizable shape in Omega^eps_2n(2) with at most max_r
/// factors.
CentralizerShape random_orthogonal_shape(std::mt19937_64& rng, unsigned n, bool plus,
                                         unsigned max_r);
/// A structurally valid (not necessarily realizable) shape in any ambient.
CentralizerShape random_valid_shape(std::mt19937_64& rng, unsigned max_n);

/// Lower bound for prod_{i>=start} (1 - q^{-i}): the product over `terms`
/// factors times 1 - q^{-(start+terms-1)}/(q-1).
Rational euler_tail_lower(std::uint64_t q, unsigned start, unsigned terms);

}  // namespace chardeg::lie
