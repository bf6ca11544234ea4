#include "chardeg/groups.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chardeg/errors.hpp"
#include "chardeg/exact.hpp"

namespace chardeg::groups {

Representation Representation::permutations(unsigned points) {
  if (points < 1) throw std::invalid_argument("permutation degree must be >= 1");
  return {ElementKind::permutation, points, nullptr};
}

Representation Representation::matrices(std::shared_ptr<const FiniteField> field, unsigned dim) {
  if (!field || dim < 1) throw std::invalid_argument("matrix representation needs a field and dim");
  return {ElementKind::matrix, dim, std::move(field)};
}

Representation Representation::semilinear(std::shared_ptr<const FiniteField> field, unsigned dim) {
  if (!field || dim < 1) throw std::invalid_argument("semilinear representation needs a field");
  return {ElementKind::semilinear, dim, std::move(field)};
}

GroupElement identity_element(const Representation& rep) {
  GroupElement e;
  unsigned n = rep.degree;
  if (rep.kind == ElementKind::permutation) {
    e.data.resize(n);
    for (unsigned i = 0; i < n; ++i) e.data[i] = static_cast<int>(i);
  } else {
    e.data.assign(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) e.data[i * n + i] = 1;
  }
  return e;
}

namespace {

std::vector<int> matmul(const FiniteField& F, unsigned n, const std::vector<int>& a,
                        const std::vector<int>& b) {
  std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      unsigned aik = static_cast<unsigned>(a[i * n + k]);
      if (!aik) continue;
      for (unsigned j = 0; j < n; ++j) {
        unsigned t = F.mul(aik, static_cast<unsigned>(b[k * n + j]));
        c[i * n + j] = static_cast<int>(F.add(static_cast<unsigned>(c[i * n + j]), t));
      }
    }
  return c;
}

bool singular(const FiniteField& F, unsigned n, std::vector<int> m) {
  for (unsigned col = 0, row = 0; col < n; ++col, ++row) {
    unsigned piv = row;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return true;
    for (unsigned j = 0; j < n; ++j) std::swap(m[row * n + j], m[piv * n + j]);
    unsigned inv = F.inv(static_cast<unsigned>(m[row * n + col]));
    for (unsigned r = row + 1; r < n; ++r) {
      unsigned factor = F.mul(static_cast<unsigned>(m[r * n + col]), inv);
      if (!factor) continue;
      for (unsigned j = 0; j < n; ++j) {
        unsigned t = F.mul(factor, static_cast<unsigned>(m[row * n + j]));
        m[r * n + j] = static_cast<int>(F.sub(static_cast<unsigned>(m[r * n + j]), t));
      }
    }
  }
  return false;
}

}  // namespace

GroupElement multiply(const Representation& rep, const GroupElement& a, const GroupElement& b) {
  GroupElement c;
  switch (rep.kind) {
    case ElementKind::permutation:
      // Left to right: (ab)(x) = b(a(x)).
      c.data.resize(a.data.size());
      for (std::size_t i = 0; i < a.data.size(); ++i)
        c.data[i] = b.data[static_cast<std::size_t>(a.data[i])];
      break;
    case ElementKind::matrix:
      c.data = matmul(*rep.field, rep.degree, a.data, b.data);
      break;
    case ElementKind::semilinear: {
      const FiniteField& F = *rep.field;
      std::vector<int> twisted(a.data.size());
      for (std::size_t i = 0; i < a.data.size(); ++i)
        twisted[i] = static_cast<int>(
            F.frobenius_power(static_cast<unsigned>(a.data[i]), static_cast<unsigned>(b.frob)));
      c.data = matmul(F, rep.degree, twisted, b.data);
      c.frob = static_cast<int>((a.frob + b.frob) % static_cast<int>(F.degree()));
      break;
    }
  }
  return c;
}

void check_element(const Representation& rep, const GroupElement& g) {
  unsigned n = rep.degree;
  if (rep.kind == ElementKind::permutation) {
    if (g.data.size() != n) throw std::invalid_argument("permutation has wrong degree");
    std::vector<char> seen(n, 0);
    for (int x : g.data) {
      if (x < 0 || static_cast<unsigned>(x) >= n || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[static_cast<std::size_t>(x)] = 1;
    }
    if (g.frob != 0) throw std::invalid_argument("permutations carry no Frobenius part");
    return;
  }
  const FiniteField& F = *rep.field;
  if (g.data.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix has wrong size");
  for (int x : g.data)
    if (x < 0 || static_cast<unsigned>(x) >= F.order())
      throw std::invalid_argument("matrix entry outside the field");
  if (singular(F, n, g.data)) throw std::invalid_argument("singular matrix generator");
  if (rep.kind == ElementKind::matrix && g.frob != 0)
    throw std::invalid_argument("matrices carry no Frobenius part");
  if (g.frob < 0 || static_cast<unsigned>(g.frob) >= F.degree())
    throw std::invalid_argument("Frobenius exponent out of range");
}

std::size_t ElementHash::operator()(const GroupElement& g) const {
  std::size_t h = static_cast<std::size_t>(g.frob) * 0x9e3779b97f4a7c15ULL;
  for (int x : g.data) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

std::size_t GroupTable::mul(std::size_t a, std::size_t b) const {
  if (!cayley_.empty()) return cayley_[a * elements_.size() + b];
  return index_.at(multiply(rep_, elements_[a], elements_[b]));
}

std::size_t GroupTable::inv(std::size_t a) const {
  if (!inverse_.empty()) return inverse_[a];
  return pow(a, element_order(a) - 1);
}

std::size_t GroupTable::pow(std::size_t a, std::uint64_t k) const {
  std::size_t result = identity();
  std::size_t base = a;
  while (k) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

unsigned GroupTable::element_order(std::size_t a) const {
  unsigned o = 1;
  for (std::size_t x = a; x != identity(); x = mul(x, a)) ++o;
  return o;
}

std::optional<std::size_t> GroupTable::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupTable close_group(const Representation& rep, const std::vector<GroupElement>& generators,
                       std::size_t max_order) {
  for (const auto& g : generators) check_element(rep, g);
  GroupTable t;
  t.rep_ = rep;
  GroupElement e = identity_element(rep);
  t.index_.emplace(e, 0);
  t.elements_.push_back(std::move(e));
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (const auto& g : generators) {
      GroupElement y = multiply(rep, t.elements_[i], g);
      if (t.index_.count(y)) continue;
      if (t.elements_.size() >= max_order)
        throw ResourceLimitError("group closure exceeds " + std::to_string(max_order) +
                                 " elements");
      t.index_.emplace(y, t.elements_.size());
      t.elements_.push_back(std::move(y));
    }
  }
  for (const auto& g : generators) t.generators_.push_back(t.index_.at(g));
  std::size_t n = t.elements_.size();
  if (n <= kTableLimit) {
    t.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t.cayley_[a * n + b] =
            static_cast<std::uint16_t>(t.index_.at(multiply(rep, t.elements_[a], t.elements_[b])));
    t.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (t.cayley_[a * n + b] == 0) {
          t.inverse_[a] = static_cast<std::uint16_t>(b);
          break;
        }
  }
  return t;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g) {
  std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> gens = g.generators();
  std::vector<std::size_t> gen_inv;
  for (auto s : gens) gen_inv.push_back(g.inv(s));
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls{x};
    done[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t y = g.mul(gen_inv[k], g.mul(cls[i], gens[k]));
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> generated_subgroup(const GroupTable& g,
                                            const std::vector<std::size_t>& gens_in) {
  std::vector<std::size_t> gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      std::size_t y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> derived_subgroup(const GroupTable& g, const std::vector<std::size_t>& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> comms;
  for (auto x : h)
    for (auto y : h) {
      std::size_t c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

std::vector<std::size_t> derived_series_orders(const GroupTable& g) {
  std::vector<std::size_t> h(g.order());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = i;
  std::vector<std::size_t> out{h.size()};
  while (true) {
    auto d = derived_subgroup(g, h);
    if (d.size() == h.size()) break;
    out.push_back(d.size());
    h = std::move(d);
  }
  return out;
}

bool is_solvable(const GroupTable& g) { return derived_series_orders(g).back() == 1; }

unsigned exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::uint64_t o = g.element_order(i);
    e = e / std::__gcd(e, o) * o;
  }
  return static_cast<unsigned>(e);
}

std::vector<std::size_t> p_elements(const GroupTable& g, std::uint64_t p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::uint64_t o = g.element_order(i);
    while (o % p == 0) o /= p;
    if (o == 1) out.push_back(i);
  }
  return out;
}

bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& set) {
  std::vector<char> in(g.order(), 0);
  for (auto x : set) in[x] = 1;
  if (!in[g.identity()]) return false;
  for (auto x : set)
    for (auto y : set)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

// ---- Constructions ----

namespace {

GroupElement perm(std::vector<int> images) { return {std::move(images), 0}; }

std::shared_ptr<const FiniteField> field_of_order(unsigned q) {
  auto pp = exact::as_prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return std::make_shared<const FiniteField>(static_cast<unsigned>(pp->prime), pp->exponent);
}

GroupElement mat(std::vector<int> entries) { return {std::move(entries), 0}; }

// [[1,x,y],[0,1,z],[0,0,t]]
GroupElement isaacs(unsigned x, unsigned y, unsigned z, unsigned t) {
  return mat({1, static_cast<int>(x), static_cast<int>(y), 0, 1, static_cast<int>(z), 0, 0,
              static_cast<int>(t)});
}

std::vector<GroupElement> example_generators(ExampleKind kind, const FiniteField& F) {
  std::vector<GroupElement> gens;
  unsigned w = F.primitive_element();
  for (unsigned i = 0; i < F.degree(); ++i) {
    unsigned b = F.basis(i);
    if (kind == ExampleKind::isaacs_K) {
      gens.push_back(isaacs(b, 0, 0, w));
      gens.push_back(isaacs(0, b, 0, w));
      gens.push_back(isaacs(0, 0, b, w));
    } else {
      gens.push_back(isaacs(b, 0, 0, 1));
      gens.push_back(isaacs(0, 0, b, 1));
    }
  }
  if (kind == ExampleKind::p_semidirect_L && F.order() > 2) gens.push_back(isaacs(0, 0, 0, w));
  return gens;
}

void check_example_q(unsigned q) {
  if (q < 2 || !exact::as_prime_power(q))
    throw std::invalid_argument("q must be a prime power >= 2");
  if (q > 9) throw ResourceLimitError("example groups are built only for q <= 9");
}

}  // namespace

GroupTable cyclic_group(unsigned n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<int> c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<int>((i + 1) % n);
  return close_group(Representation::permutations(n), {perm(c)});
}

GroupTable dihedral_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<int> r(n), s(n);
  for (unsigned i = 0; i < n; ++i) {
    r[i] = static_cast<int>((i + 1) % n);
    s[i] = static_cast<int>((n - i) % n);
  }
  return close_group(Representation::permutations(n), {perm(r), perm(s)});
}

GroupTable symmetric_group(unsigned n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  std::vector<int> t(n), c(n);
  for (unsigned i = 0; i < n; ++i) {
    t[i] = static_cast<int>(i);
    c[i] = static_cast<int>((i + 1) % n);
  }
  if (n >= 2) std::swap(t[0], t[1]);
  return close_group(Representation::permutations(n), {perm(t), perm(c)});
}

GroupTable alternating_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("alternating group needs n >= 3");
  std::vector<GroupElement> gens;
  for (unsigned k = 2; k < n; ++k) {
    std::vector<int> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<int>(i);
    c[0] = 1;
    c[1] = static_cast<int>(k);
    c[k] = 0;
    gens.push_back(perm(c));
  }
  return close_group(Representation::permutations(n), gens);
}

GroupTable sl2(unsigned p) {
  auto F = std::make_shared<const FiniteField>(p, 1);
  return close_group(Representation::matrices(F, 2), {mat({1, 1, 0, 1}), mat({1, 0, 1, 1})});
}

GroupTable gl2(unsigned p) {
  auto F = std::make_shared<const FiniteField>(p, 1);
  int w = static_cast<int>(F->primitive_element());
  return close_group(Representation::matrices(F, 2),
                     {mat({1, 1, 0, 1}), mat({1, 0, 1, 1}), mat({w, 0, 0, 1})});
}

GroupTable sl3_2() {
  auto F = std::make_shared<const FiniteField>(2, 1);
  return close_group(Representation::matrices(F, 3), {mat({1, 1, 0, 0, 1, 0, 0, 0, 1}),
                                                      mat({1, 0, 0, 0, 1, 1, 0, 0, 1}),
                                                      mat({1, 0, 0, 0, 1, 0, 1, 0, 1})});
}

GroupTable quaternion8() {
  auto F = std::make_shared<const FiniteField>(3, 1);
  return close_group(Representation::matrices(F, 2), {mat({0, 2, 1, 0}), mat({1, 1, 1, 2})});
}

std::string to_string(ExampleKind k) {
  switch (k) {
    case ExampleKind::isaacs_K: return "isaacs_K";
    case ExampleKind::p_semidirect_L: return "p_semidirect_L";
    case ExampleKind::heisenberg: return "heisenberg";
  }
  return "?";
}

GroupTable build_example_group(ExampleKind kind, unsigned q, std::size_t max_order) {
  check_example_q(q);
  auto F = field_of_order(q);
  return close_group(Representation::matrices(F, 3), example_generators(kind, *F), max_order);
}

GroupTable build_gamma(unsigned q, std::size_t max_order) {
  check_example_q(q);
  auto F = field_of_order(q);
  auto gens = example_generators(ExampleKind::isaacs_K, *F);
  auto rep = Representation::semilinear(F, 3);
  if (F->degree() > 1) {
    GroupElement sigma = identity_element(rep);
    sigma.frob = 1;
    gens.push_back(sigma);
  }
  return close_group(rep, gens, max_order);
}

bool has_isaacs_form(const GroupTable& g, std::size_t i) {
  const auto& d = g.element(i).data;
  if (g.representation().degree != 3 || g.element(i).frob != 0) return false;
  return d[0] == 1 && d[3] == 0 && d[4] == 1 && d[6] == 0 && d[7] == 0 && d[8] != 0;
}

GroupTable parse_group_spec(const std::string& json_text, std::size_t max_order) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("group spec is not valid JSON: ") + e.what());
  }
  try {
    std::string kind = j.at("kind").get<std::string>();
    std::vector<GroupElement> gens;
    if (kind == "permutation") {
      auto rep = Representation::permutations(j.at("degree").get<unsigned>());
      for (const auto& g : j.at("generators")) gens.push_back(perm(g.get<std::vector<int>>()));
      return close_group(rep, gens, max_order);
    }
    if (kind == "matrix") {
      const auto& fj = j.at("field");
      unsigned p = fj.at("p").get<unsigned>();
      unsigned f = fj.value("f", 1u);
      std::shared_ptr<const FiniteField> F;
      if (fj.contains("modulus"))
        F = std::make_shared<const FiniteField>(p, f, fj.at("modulus").get<std::vector<unsigned>>());
      else
        F = std::make_shared<const FiniteField>(p, f);
      unsigned dim = j.at("dimension").get<unsigned>();
      auto rep = Representation::matrices(F, dim);
      for (const auto& g : j.at("generators")) {
        GroupElement e;
        auto rows = g.get<std::vector<std::vector<int>>>();
        if (rows.size() != dim) throw std::invalid_argument("matrix generator has wrong row count");
        for (const auto& row : rows) {
          if (row.size() != dim) throw std::invalid_argument("matrix generator row has wrong length");
          e.data.insert(e.data.end(), row.begin(), row.end());
        }
        gens.push_back(std::move(e));
      }
      return close_group(rep, gens, max_order);
    }
    throw ConfigError("unknown group kind: " + kind);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed group spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid group spec: ") + e.what());
  }
}

GroupTable load_group_spec(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group spec: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str(), max_order);
}

}  // namespace chardeg::groups
