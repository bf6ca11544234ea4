#include "chardeg/lie.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "chardeg/errors.hpp"
#include "chardeg/gf2poly.hpp"

namespace chardeg::lie {

namespace {

BigInt P(const BigInt& q, unsigned long e) { return exact::pow(q, e); }

BigInt gcd_ui(unsigned long a, const BigInt& b) { return exact::gcd(BigInt(a), b); }

bool is_odd_power_of(std::uint64_t q, std::uint64_t p) {
  auto pp = exact::as_prime_power(q);
  return pp && pp->prime == p && pp->exponent % 2 == 1;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::twistedA: return "2A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::twistedD: return "2D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::twistedE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::twistedB2: return "2B2";
    case Family::twistedG2: return "2G2";
    case Family::twistedF4: return "2F4";
    case Family::triality3D4: return "3D4";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string SimpleGroupId::to_string() const {
  return family_name(family) + "_" + std::to_string(rank) + "(" + std::to_string(q) + ")";
}

void validate(const SimpleGroupId& id) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument(id.to_string() + ": " + why);
  };
  if (!exact::as_prime_power(id.q)) bad("q is not a prime power");
  auto fixed = [&](unsigned r) {
    if (id.rank != r) bad("rank must be " + std::to_string(r));
  };
  switch (id.family) {
    case Family::A:
      if (id.rank < 1) bad("rank must be >= 1");
      if (id.rank == 1 && id.q <= 3) bad("not simple");
      break;
    case Family::twistedA:
      if (id.rank < 2) bad("rank must be >= 2");
      if (id.rank == 2 && id.q == 2) bad("not simple");
      break;
    case Family::B:
    case Family::C:
      if (id.rank < 2) bad("rank must be >= 2");
      if (id.rank == 2 && id.q == 2) bad("not simple");
      break;
    case Family::D:
    case Family::twistedD:
      if (id.rank < 4) bad("rank must be >= 4");
      break;
    case Family::G2:
      fixed(2);
      if (id.q == 2) bad("not simple");
      break;
    case Family::F4: fixed(4); break;
    case Family::E6:
    case Family::twistedE6: fixed(6); break;
    case Family::E7: fixed(7); break;
    case Family::E8: fixed(8); break;
    case Family::triality3D4: fixed(4); break;
    case Family::twistedB2:
      fixed(2);
      if (!is_odd_power_of(id.q, 2) || id.q == 2) bad("q must be 2^(2m+1), m >= 1");
      break;
    case Family::twistedG2:
      fixed(2);
      if (!is_odd_power_of(id.q, 3) || id.q == 3) bad("q must be 3^(2m+1), m >= 1");
      break;
    case Family::twistedF4:
      fixed(4);
      if (!is_odd_power_of(id.q, 2) || id.q == 2) bad("q must be 2^(2m+1), m >= 1");
      break;
  }
}

bool is_valid(const SimpleGroupId& id) {
  try {
    validate(id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::uint64_t characteristic(const SimpleGroupId& id) {
  auto pp = exact::as_prime_power(id.q);
  if (!pp) throw std::invalid_argument(id.to_string() + ": q is not a prime power");
  return pp->prime;
}

BigInt sc_order(const SimpleGroupId& id) {
  validate(id);
  const BigInt q(static_cast<unsigned long>(id.q));
  const unsigned long n = id.rank;
  BigInt o = 1;
  switch (id.family) {
    case Family::A:
      o = P(q, n * (n + 1) / 2);
      for (unsigned long i = 1; i <= n; ++i) o *= P(q, i + 1) - 1;
      break;
    case Family::twistedA:
      o = P(q, n * (n + 1) / 2);
      for (unsigned long i = 1; i <= n; ++i) o *= P(q, i + 1) - ((i + 1) % 2 ? -1 : 1);
      break;
    case Family::B:
    case Family::C:
      o = P(q, n * n);
      for (unsigned long i = 1; i <= n; ++i) o *= P(q, 2 * i) - 1;
      break;
    case Family::D:
    case Family::twistedD:
      o = P(q, n * (n - 1)) * (P(q, n) - (id.family == Family::D ? 1 : -1));
      for (unsigned long i = 1; i < n; ++i) o *= P(q, 2 * i) - 1;
      break;
    case Family::G2:
      o = P(q, 6) * (P(q, 6) - 1) * (P(q, 2) - 1);
      break;
    case Family::F4:
      o = P(q, 24) * (P(q, 12) - 1) * (P(q, 8) - 1) * (P(q, 6) - 1) * (P(q, 2) - 1);
      break;
    case Family::E6:
    case Family::twistedE6: {
      int s = id.family == Family::E6 ? -1 : 1;
      o = P(q, 36) * (P(q, 12) - 1) * (P(q, 9) + s) * (P(q, 8) - 1) * (P(q, 6) - 1) *
          (P(q, 5) + s) * (P(q, 2) - 1);
      break;
    }
    case Family::E7:
      o = P(q, 63);
      for (unsigned long e : {18, 14, 12, 10, 8, 6, 2}) o *= P(q, e) - 1;
      break;
    case Family::E8:
      o = P(q, 120);
      for (unsigned long e : {30, 24, 20, 18, 14, 12, 8, 2}) o *= P(q, e) - 1;
      break;
    case Family::twistedB2:
      o = P(q, 2) * (P(q, 2) + 1) * (q - 1);
      break;
    case Family::twistedG2:
      o = P(q, 3) * (P(q, 3) + 1) * (q - 1);
      break;
    case Family::twistedF4:
      o = P(q, 12) * (P(q, 6) + 1) * (P(q, 4) - 1) * (P(q, 3) + 1) * (q - 1);
      break;
    case Family::triality3D4:
      o = P(q, 12) * (P(q, 8) + P(q, 4) + 1) * (P(q, 6) - 1) * (P(q, 2) - 1);
      break;
  }
  return o;
}

BigInt simple_order(const SimpleGroupId& id) {
  BigInt o = sc_order(id);
  const BigInt q(static_cast<unsigned long>(id.q));
  const unsigned long n = id.rank;
  BigInt centre = 1;
  switch (id.family) {
    case Family::A: centre = gcd_ui(n + 1, q - 1); break;
    case Family::twistedA: centre = gcd_ui(n + 1, q + 1); break;
    case Family::B:
    case Family::C:
    case Family::E7: centre = gcd_ui(2, q - 1); break;
    case Family::D: centre = gcd_ui(4, P(q, n) - 1); break;
    case Family::twistedD: centre = gcd_ui(4, P(q, n) + 1); break;
    case Family::E6: centre = gcd_ui(3, q - 1); break;
    case Family::twistedE6: centre = gcd_ui(3, q + 1); break;
    default: break;
  }
  return o / centre;
}

BigInt steinberg_degree(const SimpleGroupId& id) {
  return exact::p_part(simple_order(id), characteristic(id));
}

bool verify_lie_38(const SimpleGroupId& id) {
  if (id.family == Family::A && id.rank == 1)
    throw ExcludedCaseError("PSL2(q) is excluded from the 3/8 Steinberg check");
  return exact::pow_compare(steinberg_degree(id), 8, simple_order(id), 3) ==
         std::strong_ordering::greater;
}

std::vector<SimpleGroupId> lie_grid(unsigned max_rank, std::uint64_t max_q) {
  std::vector<SimpleGroupId> out;
  for (Family f : kAllFamilies)
    for (unsigned r = 1; r <= max_rank; ++r)
      for (std::uint64_t q = 2; q <= max_q; ++q) {
        SimpleGroupId id{f, r, q};
        if (is_valid(id)) out.push_back(id);
      }
  return out;
}

// ---- Seitz-type bound ----

std::string torus_key(const SimpleGroupId& id) {
  return family_name(id.family) + "/" + std::to_string(id.rank) + "/" + std::to_string(id.q);
}

TorusTable load_torus_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open torus table: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed torus table " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("torus table must be a JSON object: " + path);
  TorusTable out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      throw ConfigError("torus order for " + it.key() + " must be a decimal string");
    try {
      BigInt v = exact::parse_bigint(it.value().get<std::string>());
      if (v < 1) throw std::invalid_argument("non-positive");
      out.emplace(it.key(), v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad torus order for " + it.key() + ": " + e.what());
    }
  }
  return out;
}

bool is_untwisted_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

BigInt split_torus_order(const SimpleGroupId& id) {
  if (!is_untwisted_classical(id.family))
    throw std::invalid_argument(id.to_string() + ": split torus formula needs an untwisted type");
  return exact::pow(BigInt(static_cast<unsigned long>(id.q)) - 1, id.rank);
}

std::vector<SimpleGroupId> seitz_list() {
  std::vector<SimpleGroupId> out;
  for (unsigned r = 8; r <= 13; ++r) out.push_back({Family::A, r, 3});
  for (unsigned r = 8; r <= 13; ++r) out.push_back({Family::twistedA, r, 2});
  for (unsigned r = 9; r <= 17; ++r) out.push_back({Family::C, r, 3});
  for (unsigned r = 9; r <= 17; ++r) out.push_back({Family::B, r, 3});
  for (unsigned r = 9; r <= 30; ++r) out.push_back({Family::D, r, 3});
  for (unsigned r = 9; r <= 30; ++r) out.push_back({Family::twistedD, r, 3});
  return out;
}

bool in_seitz_list(const SimpleGroupId& id) {
  auto l = seitz_list();
  return std::find(l.begin(), l.end(), id) != l.end();
}

SeitzReport seitz_check(const SimpleGroupId& id, const BigInt& torus_order) {
  if (!in_seitz_list(id)) throw std::invalid_argument(id.to_string() + " is not in the Seitz list");
  BigInt g = sc_order(id);
  if (torus_order < 1 || !mpz_divisible_p(g.get_mpz_t(), torus_order.get_mpz_t()))
    throw std::invalid_argument("torus order does not divide |G| for " + id.to_string());
  BigInt bound = exact::p_prime_part(g / torus_order, characteristic(id));
  return {bound, simple_order(id) > 2 * bound * bound};
}

// ---- Centralizer shapes ----

std::string to_string(Ambient a) {
  switch (a) {
    case Ambient::SL: return "SL";
    case Ambient::Sp: return "Sp";
    case Ambient::OmegaPlus: return "Omega+";
    case Ambient::OmegaMinus: return "Omega-";
  }
  return "?";
}

std::string CentralizerShape::to_string() const {
  std::string dim = ambient == Ambient::SL ? std::to_string(n) : std::to_string(2 * n);
  std::string out = lie::to_string(ambient) + "_" + dim + "(2) [";
  bool first = true;
  if (kkind != KKind::none) {
    out += kkind == KKind::Sp ? "Sp" : (kkind == KKind::OmegaPlus ? "Omega+" : "Omega-");
    out += "_" + std::to_string(2 * m) + "(2)";
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) out += " x ";
    first = false;
    out += std::string(f.eps > 0 ? "GL" : "GU") + "_" + std::to_string(f.k) + "(2^" +
           std::to_string(f.d) + ")";
  }
  return out + "]";
}

namespace {

int ambient_sign(Ambient a) { return a == Ambient::OmegaMinus ? -1 : 1; }
bool orthogonal(Ambient a) { return a == Ambient::OmegaPlus || a == Ambient::OmegaMinus; }

int factor_sign_product(const std::vector<ClassicalFactor>& fs) {
  int s = 1;
  for (const auto& f : fs)
    if (f.eps < 0 && f.k % 2) s = -s;
  return s;
}

BigInt sp_order(unsigned n) {
  BigInt o = exact::pow(2, static_cast<unsigned long>(n) * n);
  for (unsigned long i = 1; i <= n; ++i) o *= exact::pow(2, 2 * i) - 1;
  return o;
}

BigInt omega_order(unsigned n, int eps) {
  BigInt o = exact::pow(2, static_cast<unsigned long>(n) * (n - 1)) * (exact::pow(2, n) - eps);
  for (unsigned long i = 1; i < n; ++i) o *= exact::pow(2, 2 * i) - 1;
  return o;
}

}  // namespace

void validate(const CentralizerShape& s) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("invalid centralizer shape " + s.to_string() + ": " + why);
  };
  if (s.n < 1) bad("n must be >= 1");
  unsigned long dim = s.m;
  int plus_ones = 0;
  for (const auto& f : s.factors) {
    if (f.d < 1 || f.k < 1) bad("factor parameters must be >= 1");
    if (f.eps != 1 && f.eps != -1) bad("factor sign must be +1 or -1");
    if (f.d == 1 && f.eps == 1) ++plus_ones;
    dim += static_cast<unsigned long>(f.d) * f.k;
  }
  if (plus_ones > 1) bad("(d, eps) = (1, +) occurs more than once");
  if (dim != s.n) bad("sum k_i d_i + m = " + std::to_string(dim) + " != n");
  if ((s.kkind == KKind::none) != (s.m == 0)) bad("K factor must be present exactly when m > 0");
  switch (s.ambient) {
    case Ambient::SL:
      if (s.kkind != KKind::none) bad("SL has no K factor");
      for (const auto& f : s.factors)
        if (f.eps != 1) bad("SL factors are all of type GL");
      break;
    case Ambient::Sp:
      if (s.kkind != KKind::none && s.kkind != KKind::Sp) bad("K must be symplectic");
      break;
    case Ambient::OmegaPlus:
    case Ambient::OmegaMinus: {
      if (s.kkind == KKind::Sp) bad("K must be orthogonal");
      int beta = s.kkind == KKind::OmegaMinus ? -1 : 1;
      if (beta * factor_sign_product(s.factors) != ambient_sign(s.ambient))
        bad("sign rule eps = beta * prod eps_i^k_i violated");
      break;
    }
  }
}

bool is_realizable(const CentralizerShape& s) {
  validate(s);
  std::map<std::pair<unsigned, int>, unsigned long> used;
  for (const auto& f : s.factors) ++used[{f.d, f.eps}];
  for (const auto& [key, count] : used) {
    auto [d, eps] = key;
    BigInt slots;
    if (s.ambient == Ambient::SL) {
      slots = gf2::count_irreducible_monic(d) - (d == 1 ? 1 : 0);
    } else {
      slots = gf2::available_slots(d, eps > 0);
    }
    if (slots < count) return false;
  }
  return true;
}

CentralizerShape canonical(CentralizerShape s) {
  std::stable_sort(s.factors.begin(), s.factors.end(),
                   [](const ClassicalFactor& a, const ClassicalFactor& b) {
                     if (a.d * a.k != b.d * b.k) return a.d * a.k > b.d * b.k;
                     if (a.d != b.d) return a.d > b.d;
                     return a.eps > b.eps;
                   });
  return s;
}

BigInt gl_order(unsigned k, unsigned d, int eps) {
  BigInt o = exact::pow(2, static_cast<unsigned long>(d) * k * (k - 1) / 2);
  for (unsigned long i = 1; i <= k; ++i) {
    BigInt t = exact::pow(2, d * i);
    o *= t - ((eps < 0 && i % 2) ? -1 : 1);
  }
  return o;
}

BigInt ambient_order(Ambient a, unsigned n) {
  switch (a) {
    case Ambient::SL: {
      BigInt o = exact::pow(2, static_cast<unsigned long>(n) * (n - 1) / 2);
      for (unsigned long i = 2; i <= n; ++i) o *= exact::pow(2, i) - 1;
      return o;
    }
    case Ambient::Sp: return sp_order(n);
    case Ambient::OmegaPlus: return omega_order(n, 1);
    case Ambient::OmegaMinus: return omega_order(n, -1);
  }
  return 0;
}

BigInt ambient_steinberg(Ambient a, unsigned n) {
  unsigned long e = static_cast<unsigned long>(n);
  switch (a) {
    case Ambient::SL: return exact::pow(2, e * (e - 1) / 2);
    case Ambient::Sp: return exact::pow(2, e * e);
    default: return exact::pow(2, e * (e - 1));
  }
}

BigInt centralizer_order(const CentralizerShape& s) {
  validate(s);
  BigInt o = 1;
  switch (s.kkind) {
    case KKind::none: break;
    case KKind::Sp: o = sp_order(s.m); break;
    case KKind::OmegaPlus: o = omega_order(s.m, 1); break;
    case KKind::OmegaMinus: o = omega_order(s.m, -1); break;
  }
  for (const auto& f : s.factors) o *= gl_order(f.k, f.d, f.eps);
  return o;
}

BigInt centralizer_steinberg(const CentralizerShape& s) {
  validate(s);
  unsigned long e = 0;
  unsigned long m = s.m;
  if (s.kkind == KKind::Sp) e = m * m;
  else if (s.kkind != KKind::none) e = m * (m - 1);
  for (const auto& f : s.factors) e += static_cast<unsigned long>(f.d) * f.k * (f.k - 1) / 2;
  return exact::pow(2, e);
}

BigInt semisimple_degree(const CentralizerShape& s) {
  BigInt g = ambient_order(s.ambient, s.n);
  BigInt c = centralizer_order(s);
  if (!mpz_divisible_p(g.get_mpz_t(), c.get_mpz_t()))
    throw std::invalid_argument("centralizer order does not divide the ambient order for " +
                                s.to_string());
  return exact::p_prime_part(g / c, 2) * centralizer_steinberg(s);
}

std::string to_string(Situation s) {
  switch (s) {
    case Situation::i: return "i";
    case Situation::ii: return "ii";
    case Situation::iii: return "iii";
    case Situation::iv: return "iv";
  }
  return "?";
}

Rational situation_threshold(Situation sit) {
  return sit == Situation::iv ? Rational(81, 272) : Rational(81, 320);
}

CentralizerShape situation_shape(const CentralizerShape& shape, unsigned i, unsigned j,
                                 Situation sit) {
  CentralizerShape s = canonical(shape);
  validate(s);
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("situation (" + to_string(sit) + ") not applicable to " +
                                s.to_string() + ": " + why);
  };
  unsigned r = static_cast<unsigned>(s.factors.size());
  if (r < 4) bad("needs at least 4 GL/GU factors");
  if (i == j || i < 1 || j < 1 || i > r || j > r) bad("pair (i, j) out of range");
  const auto& fi = s.factors[i - 1];
  const auto& fj = s.factors[j - 1];
  unsigned d0 = fi.d * fi.k + fj.d * fj.k;
  if (d0 % 2) bad("d0 = " + std::to_string(d0) + " is odd");
  if (d0 < 4) bad("d0 = " + std::to_string(d0) + " < 4");
  int e = (fi.eps < 0 && fi.k % 2 ? -1 : 1) * (fj.eps < 0 && fj.k % 2 ? -1 : 1);
  if (s.ambient == Ambient::SL && sit != Situation::i) bad("only situation (i) exists in SL");

  CentralizerShape t = s;
  t.factors.clear();
  for (unsigned idx = 1; idx <= r; ++idx)
    if (idx != i && idx != j) t.factors.push_back(s.factors[idx - 1]);

  auto find = [&](unsigned d, int eps) {
    return std::find_if(t.factors.begin(), t.factors.end(),
                        [&](const ClassicalFactor& f) { return f.d == d && f.eps == eps; });
  };

  switch (sit) {
    case Situation::i:
      if (find(d0, e) != t.factors.end()) bad("a factor of type (d0, eps) is already present");
      t.factors.push_back({d0, 1, e});
      break;
    case Situation::ii: {
      auto it = find(d0, e);
      if (it == t.factors.end()) bad("no factor of type (d0, eps) to merge into");
      ++it->k;
      break;
    }
    case Situation::iii:
      if (e != 1) bad("eps_i^k_i eps_j^k_j must be +1");
      if (find(d0 / 2, -1) != t.factors.end()) bad("a GU factor over 2^(d0/2) is already present");
      t.factors.push_back({d0 / 2, 2, -1});
      break;
    case Situation::iv: {
      if (e != 1) bad("eps_i^k_i eps_j^k_j must be +1");
      auto it = find(d0 / 2, -1);
      if (it == t.factors.end()) bad("no GU factor over 2^(d0/2) to merge into");
      it->k += 2;
      break;
    }
  }
  return canonical(t);
}

Rational situation_ratio(const CentralizerShape& s, unsigned i, unsigned j, Situation sit) {
  CentralizerShape t = situation_shape(s, i, j, sit);
  Rational out(semisimple_degree(t), semisimple_degree(canonical(s)));
  out.canonicalize();
  return out;
}

namespace {

std::vector<ClassicalFactor> orthogonal_options(unsigned max_dk) {
  std::vector<ClassicalFactor> out;
  for (unsigned d = 1; d <= max_dk; ++d)
    for (unsigned k = 1; d * k <= max_dk; ++k)
      for (int eps : {1, -1})
        if (gf2::available_slots(d, eps > 0) >= 1) out.push_back({d, k, eps});
  return out;
}

// Fills K and the ambient sign so that the sign rule holds; nullopt when
// m = 0 forces a sign different from the requested ambient.
std::optional<CentralizerShape> close_orthogonal(unsigned n, bool plus,
                                                 std::vector<ClassicalFactor> fs) {
  unsigned long used = 0;
  for (const auto& f : fs) used += static_cast<unsigned long>(f.d) * f.k;
  if (used > n) return std::nullopt;
  CentralizerShape s{plus ? Ambient::OmegaPlus : Ambient::OmegaMinus, n, KKind::none, 0,
                     std::move(fs)};
  s.m = static_cast<unsigned>(n - used);
  int prod = factor_sign_product(s.factors);
  int amb = plus ? 1 : -1;
  if (s.m == 0) {
    if (prod != amb) return std::nullopt;
  } else {
    s.kkind = amb * prod > 0 ? KKind::OmegaPlus : KKind::OmegaMinus;
  }
  return canonical(std::move(s));
}

}  // namespace

std::vector<SituationInstance> enumerate_situations(unsigned n, unsigned r, unsigned max_dk) {
  auto options = orthogonal_options(max_dk);
  std::vector<SituationInstance> out;
  std::vector<std::size_t> pick(r, 0);
  // Multisets of r options as nondecreasing index vectors.
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned pos, std::size_t from) {
    if (pos == r) {
      std::vector<ClassicalFactor> fs;
      for (auto p : pick) fs.push_back(options[p]);
      for (bool plus : {true, false}) {
        auto s = close_orthogonal(n, plus, fs);
        if (!s || !is_realizable(*s)) continue;
        for (unsigned i = 1; i <= r; ++i)
          for (unsigned j = i + 1; j <= r; ++j)
            for (Situation sit : {Situation::i, Situation::ii, Situation::iii, Situation::iv}) {
              try {
                auto t = situation_shape(*s, i, j, sit);
                if (is_realizable(t)) out.push_back({*s, i, j, sit});
              } catch (const std::invalid_argument&) {
              }
            }
      }
      return;
    }
    for (std::size_t o = from; o < options.size(); ++o) {
      pick[pos] = o;
      rec(pos + 1, o);
    }
  };
  rec(0, 0);
  return out;
}

CentralizerShape random_orthogonal_shape(std::mt19937_64& rng, unsigned n, bool plus,
                                         unsigned max_r) {
  auto options = orthogonal_options(n);
  std::uniform_int_distribution<unsigned> rdist(0, max_r);
  std::uniform_int_distribution<std::size_t> odist(0, options.size() - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    unsigned r = rdist(rng);
    std::vector<ClassicalFactor> fs;
    for (unsigned t = 0; t < r; ++t) fs.push_back(options[odist(rng)]);
    auto s = close_orthogonal(n, plus, fs);
    if (s && is_realizable(*s)) return *s;
  }
  throw std::runtime_error("random_orthogonal_shape: no realizable shape found");
}

CentralizerShape random_valid_shape(std::mt19937_64& rng, unsigned max_n) {
  if (max_n < 2) throw std::invalid_argument("random_valid_shape needs max_n >= 2");
  std::uniform_int_distribution<int> adist(0, 3);
  std::uniform_int_distribution<unsigned> ndist(2, max_n);
  std::uniform_int_distribution<int> coin(0, 1);
  Ambient a = static_cast<Ambient>(adist(rng));
  unsigned n = ndist(rng);
  CentralizerShape s{a, n, KKind::none, 0, {}};
  if (a != Ambient::SL) s.m = std::uniform_int_distribution<unsigned>(0, n)(rng);
  unsigned left = n - s.m;
  bool have_one_plus = false;
  while (left > 0) {
    unsigned dk = std::uniform_int_distribution<unsigned>(1, left)(rng);
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= dk; ++d)
      if (dk % d == 0) divisors.push_back(d);
    unsigned d = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    int eps = (a == Ambient::SL || coin(rng)) ? 1 : -1;
    if (d == 1 && eps == 1) {
      if (have_one_plus) {
        // Eigenvalue 1 occurs in a single factor; enlarge it.
        for (auto& f : s.factors)
          if (f.d == 1 && f.eps == 1) f.k += dk;
        left -= dk;
        continue;
      }
      have_one_plus = true;
    }
    s.factors.push_back({d, dk / d, eps});
    left -= dk;
  }
  if (a == Ambient::Sp && s.m > 0) s.kkind = KKind::Sp;
  if (orthogonal(a)) {
    int prod = factor_sign_product(s.factors);
    if (s.m == 0) {
      s.ambient = prod > 0 ? Ambient::OmegaPlus : Ambient::OmegaMinus;
    } else {
      s.kkind = ambient_sign(a) * prod > 0 ? KKind::OmegaPlus : KKind::OmegaMinus;
    }
  }
  return canonical(std::move(s));
}

Rational euler_tail_lower(std::uint64_t q, unsigned start, unsigned terms) {
  if (q < 2) throw std::invalid_argument("euler_tail_lower needs q >= 2");
  if (start < 1) throw std::invalid_argument("euler_tail_lower needs start >= 1");
  BigInt Q(static_cast<unsigned long>(q));
  Rational prod = 1;
  for (unsigned i = start; i < start + terms; ++i) {
    BigInt qi = exact::pow(Q, i);
    prod *= Rational(qi - 1, qi);
  }
  BigInt last = exact::pow(Q, start + terms - 1);
  Rational tail = 1 - Rational(1, last * (Q - 1));
  Rational out = prod * tail;
  out.canonicalize();
  return out;
}

}  // namespace chardeg::lie
