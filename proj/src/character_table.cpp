#include "chardeg/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chardeg/errors.hpp"

namespace chardeg::chars {

using groups::GroupTable;

std::vector<std::uint64_t> CharacterTable::degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& row : characters) out.push_back(static_cast<std::uint64_t>(*row[0].as_integer()));
  return out;
}

DegreeMultiset CharacterTable::degree_multiset() const {
  DegreeMultiset m;
  for (auto d : degrees()) m.add(BigInt(static_cast<unsigned long>(d)));
  return m;
}

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw std::logic_error("inverting zero modulo the Dixon prime");
    return pow(a, p - 2);
  }
};

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> primes;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  ModP F{p};
  for (u64 g = 2; g < p; ++g) {
    bool ok = std::all_of(primes.begin(), primes.end(),
                          [&](u64 q) { return F.pow(g, (p - 1) / q) != 1; });
    if (ok) return g;
  }
  return 1;  // p == 2
}

u64 choose_prime(u64 exponent, u64 order) {
  u64 root = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  while (root * root < order) ++root;
  u64 floor_bound = 2 * root;
  constexpr u64 kSearchLimit = 100000000;
  for (u64 l = exponent + 1; l < kSearchLimit; l += exponent)
    if (l > floor_bound && is_prime_u64(l)) return l;
  throw std::logic_error("no Dixon prime found below the search limit");
}

// Subspace spanned by rows in reduced row echelon form.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::size_t next_matrix = 1;
};

Subspace echelon(std::vector<Vec> rows, const ModP& F) {
  Subspace s;
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    u64 inv = F.inv(rows[r][col]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      u64 c = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = F.sub(rows[i][k], F.mul(c, rows[r][k]));
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

// Null space of an r x r matrix (row-major), as coefficient vectors.
std::vector<Vec> null_space(std::vector<Vec> a, const ModP& F) {
  std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  std::vector<char> is_pivot(n, 0);
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    u64 inv = F.inv(a[r][col]);
    for (auto& x : a[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col] == 0) continue;
      u64 c = a[i][col];
      for (std::size_t k = 0; k < n; ++k) a[i][k] = F.sub(a[i][k], F.mul(c, a[r][k]));
    }
    pivot_col.push_back(col);
    is_pivot[col] = 1;
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = F.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Dense accumulation of products of cyclotomic values.
void accumulate(std::vector<std::int64_t>& acc, const Cyclo& a, const Cyclo& b, std::int64_t w) {
  unsigned n = static_cast<unsigned>(acc.size());
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) acc[(i + j) % n] += w * x * y;
}

bool dense_equals(unsigned n, const std::vector<std::int64_t>& acc, std::int64_t value) {
  return Cyclo::from_dense(n, acc) == Cyclo(n, value);
}

}  // namespace

CharacterTable dixon_character_table(const GroupTable& g) {
  if (!g.has_table() || g.order() > groups::kTableLimit)
    throw ResourceLimitError("character tables need a group of order <= " +
                             std::to_string(groups::kTableLimit));
  const std::size_t order = g.order();
  CharacterTable t;
  t.group_order = order;

  auto classes = groups::conjugacy_classes(g);
  const std::size_t k = classes.size();
  t.class_of.assign(order, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (auto x : classes[j]) t.class_of[x] = j;
    t.classes.push_back({classes[j].front(), classes[j].size(), g.element_order(classes[j].front())});
  }
  for (std::size_t j = 0; j < k; ++j) t.inverse_class.push_back(t.class_of[g.inv(t.classes[j].representative)]);

  u64 e = 1;
  for (const auto& c : t.classes) e = std::lcm(e, static_cast<u64>(c.element_order));
  t.conductor = static_cast<unsigned>(e);
  const u64 ell = choose_prime(e, order);
  t.prime = ell;
  const ModP F{ell};

  // M_j[l][m] = #{x in C_j : x^-1 z_m in C_l}.
  std::vector<std::vector<Vec>> mats(k);
  auto matrix = [&](std::size_t j) -> const std::vector<Vec>& {
    if (mats[j].empty()) {
      mats[j].assign(k, Vec(k, 0));
      for (std::size_t m = 0; m < k; ++m) {
        std::size_t z = t.classes[m].representative;
        for (auto x : classes[j]) ++mats[j][t.class_of[g.mul(g.inv(x), z)]][m];
      }
      for (auto& row : mats[j])
        for (auto& x : row) x %= ell;
    }
    return mats[j];
  };

  std::vector<Vec> identity_rows(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity_rows[i][i] = 1;
  std::vector<Subspace> pending{echelon(identity_rows, F)};
  std::vector<Vec> eigen;
  while (!pending.empty()) {
    Subspace s = std::move(pending.back());
    pending.pop_back();
    const std::size_t r = s.rows.size();
    if (r == 1) {
      eigen.push_back(s.rows[0]);
      continue;
    }
    bool split = false;
    for (; s.next_matrix < k && !split; ++s.next_matrix) {
      const auto& M = matrix(s.next_matrix);
      // Column i of A holds the coordinates of M b_i.
      std::vector<Vec> A(r, Vec(r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < r; ++c) {
          std::size_t prow = s.pivots[c];
          u64 acc = 0;
          for (std::size_t m = 0; m < k; ++m) acc = F.add(acc, F.mul(M[prow][m], s.rows[i][m]));
          A[c][i] = acc;
        }
      }
      std::vector<std::vector<Vec>> spaces;
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < ell && found < r; ++lambda) {
        auto shifted = A;
        for (std::size_t i = 0; i < r; ++i) shifted[i][i] = F.sub(shifted[i][i], lambda);
        auto ns = null_space(shifted, F);
        if (ns.empty()) continue;
        found += ns.size();
        std::vector<Vec> vecs;
        for (const auto& c : ns) {
          Vec v(k, 0);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t m = 0; m < k; ++m) v[m] = F.add(v[m], F.mul(c[i], s.rows[i][m]));
          vecs.push_back(std::move(v));
        }
        spaces.push_back(std::move(vecs));
      }
      if (found != r) throw std::logic_error("class matrix is not diagonalizable modulo l");
      if (spaces.size() > 1) {
        split = true;
        for (auto& vecs : spaces) {
          Subspace child = echelon(std::move(vecs), F);
          child.next_matrix = s.next_matrix + 1;
          pending.push_back(std::move(child));
        }
      }
    }
    if (!split) throw std::logic_error("common eigenspace of dimension > 1");
  }
  if (eigen.size() != k) throw std::logic_error("eigenvector count differs from class count");

  const u64 zeta_e = F.pow(primitive_root(ell), (ell - 1) / e);
  u64 sqrt_order = static_cast<u64>(std::sqrt(static_cast<double>(order)));
  while ((sqrt_order + 1) * (sqrt_order + 1) <= order) ++sqrt_order;
  while (sqrt_order * sqrt_order > order) --sqrt_order;

  // Power maps: pm[j][s] = class of g_j^s.
  std::vector<std::vector<std::size_t>> pm(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t x = g.identity();
    for (unsigned s = 0; s < t.classes[j].element_order; ++s) {
      pm[j].push_back(t.class_of[x]);
      x = g.mul(x, t.classes[j].representative);
    }
  }

  struct Row {
    u64 degree;
    std::vector<u64> modular;
    std::vector<Cyclo> values;
  };
  std::vector<Row> rows;
  for (auto& v : eigen) {
    if (v[0] == 0) throw std::logic_error("central character with zero at the identity");
    u64 scale = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, scale);
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = F.add(s, F.mul(F.mul(v[j], v[t.inverse_class[j]]), F.inv(t.classes[j].size % ell)));
    u64 d2 = F.mul(order % ell, F.inv(s));
    u64 d = 0;
    for (u64 c = 1; c <= sqrt_order; ++c)
      if (c * c % ell == d2) {
        d = c;
        break;
      }
    if (d == 0 || order % d) throw std::logic_error("no admissible degree for a central character");
    Row row{d, {}, {}};
    for (std::size_t j = 0; j < k; ++j)
      row.modular.push_back(F.mul(F.mul(v[j], d), F.inv(t.classes[j].size % ell)));
    for (std::size_t j = 0; j < k; ++j) {
      unsigned o = t.classes[j].element_order;
      u64 zo = F.pow(zeta_e, e / o);
      u64 inv_o = F.inv(o);
      std::vector<std::int64_t> dense(e, 0);
      u64 total = 0;
      for (unsigned sdx = 0; sdx < o; ++sdx) {
        u64 m = 0;
        u64 step = F.pow(zo, (o - sdx) % o);  // zeta_o^{-s}
        u64 w = 1;
        for (unsigned tt = 0; tt < o; ++tt) {
          m = F.add(m, F.mul(row.modular[pm[j][tt]], w));
          w = F.mul(w, step);
        }
        m = F.mul(m, inv_o);
        if (m > d) throw std::logic_error("eigenvalue multiplicity out of range");
        total += m;
        dense[static_cast<std::size_t>(sdx * (e / o))] = static_cast<std::int64_t>(m);
      }
      if (total != d) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(Cyclo::from_dense(static_cast<unsigned>(e), dense));
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    bool ta = std::all_of(a.modular.begin(), a.modular.end(), [](u64 x) { return x == 1; });
    bool tb = std::all_of(b.modular.begin(), b.modular.end(), [](u64 x) { return x == 1; });
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.modular < b.modular;
  });
  for (auto& r : rows) t.characters.push_back(std::move(r.values));

  if (!check_table(t).passed()) throw std::logic_error("character table failed its orthogonality checks");
  return t;
}

TableCheck check_table(const CharacterTable& t) {
  TableCheck c;
  const std::size_t k = t.classes.size();
  const unsigned e = t.conductor;
  c.square = t.characters.size() == k;
  auto degs = t.degrees();
  std::uint64_t sq = 0;
  c.degrees_divide = true;
  for (auto d : degs) {
    sq += d * d;
    if (d == 0 || t.group_order % d) c.degrees_divide = false;
  }
  c.sum_of_squares = sq == t.group_order;

  c.row_orthogonal = true;
  for (std::size_t a = 0; a < t.characters.size() && c.row_orthogonal; ++a)
    for (std::size_t b = a; b < t.characters.size(); ++b) {
      std::vector<std::int64_t> acc(e, 0);
      for (std::size_t j = 0; j < k; ++j)
        accumulate(acc, t.characters[a][j], t.characters[b][j].conj(),
                   static_cast<std::int64_t>(t.classes[j].size));
      if (!dense_equals(e, acc, a == b ? static_cast<std::int64_t>(t.group_order) : 0)) {
        c.row_orthogonal = false;
        break;
      }
    }

  c.column_orthogonal = true;
  for (std::size_t i = 0; i < k && c.column_orthogonal; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::vector<std::int64_t> acc(e, 0);
      for (const auto& row : t.characters) accumulate(acc, row[i], row[j].conj(), 1);
      std::int64_t expect =
          i == j ? static_cast<std::int64_t>(t.group_order / t.classes[i].size) : 0;
      if (!dense_equals(e, acc, expect)) {
        c.column_orthogonal = false;
        break;
      }
    }
  return c;
}

GagolaReport gagola_analyze(const GroupTable& g, const CharacterTable& t) {
  GagolaReport rep;
  const std::size_t k = t.classes.size();
  for (const auto& row : t.characters) {
    std::size_t zeros = 0;
    for (const auto& v : row) zeros += v.is_zero();
    if (k - zeros == 2) {
      auto d = static_cast<std::uint64_t>(*row[0].as_integer());
      if (!rep.is_gagola || d > *rep.character_degree) {
        rep.is_gagola = true;
        rep.character_degree = d;
        rep.vanishing_classes = zeros;
      }
    } else if (!rep.is_gagola) {
      rep.vanishing_classes = std::max(rep.vanishing_classes, zeros);
    }
  }

  // Each nontrivial class generates a normal subgroup; minimal normal
  // subgroups are the inclusion-minimal ones among these.
  std::vector<std::vector<std::size_t>> closures;
  auto classes = groups::conjugacy_classes(g);
  for (std::size_t j = 1; j < classes.size(); ++j) {
    auto h = groups::generated_subgroup(g, classes[j]);
    if (std::find(closures.begin(), closures.end(), h) == closures.end()) closures.push_back(std::move(h));
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& h : closures) {
    bool is_min = std::none_of(closures.begin(), closures.end(), [&](const auto& o) {
      return o.size() < h.size() && std::includes(h.begin(), h.end(), o.begin(), o.end());
    });
    if (is_min) minimal.push_back(h);
  }
  rep.minimal_normal_count = minimal.size();
  if (minimal.size() == 1) {
    rep.minimal_normal_order = minimal[0].size();
    rep.minimal_normal = minimal[0];
  }
  return rep;
}

GagolaReport gagola_analyze(const GroupTable& g) { return gagola_analyze(g, dixon_character_table(g)); }

}  // namespace chardeg::chars
