#include "chardeg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "chardeg/bounds.hpp"
#include "chardeg/character_table.hpp"
#include "chardeg/errors.hpp"
#include "chardeg/gf2poly.hpp"
#include "chardeg/lie.hpp"
#include "chardeg/psl2.hpp"
#include "chardeg/records.hpp"
#include "chardeg/symalt.hpp"
#include "chardeg/young.hpp"

namespace chardeg::verify {

using exact::BigInt;
using exact::Rational;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::out_of_scope: return "out-of-scope";
  }
  return "?";
}

int Run::exit_code() const {
  for (const auto& r : results)
    if (r.status == Status::fail || r.status == Status::inconclusive) return 1;
  return 0;
}

namespace {

struct Context {
  const Config& config;
  std::optional<lie::TorusTable> torus;
  std::vector<std::pair<std::string, std::vector<records::DegreeRecord>>> records;
  std::optional<groups::GroupTable> spec_group;
};

using Task = std::function<std::vector<ClaimResult>(const Context&)>;

// Fills status from failures unless already decided.
ClaimResult finish(ClaimResult r) {
  if (r.status == Status::pass && !r.failures.empty()) r.status = Status::fail;
  return r;
}

std::string range(const std::string& var, long lo, long hi) {
  return var + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::vector<std::uint64_t> prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (exact::as_prime_power(q)) out.push_back(q);
  return out;
}

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x)); }

// ---- partitions ----

std::vector<ClaimResult> partition_claims(const Context&) {
  ClaimResult sum{"partitions/hook-sum", Status::pass, {range("n", 1, 12)}, {}, "", 0};
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    young::for_each_partition(n, [&](const young::Partition& p) {
      BigInt d = young::hook_degree(p);
      total += d * d;
    });
    if (total != exact::factorial(static_cast<unsigned long>(n))) sum.failures.push_back("n=" + std::to_string(n));
  }

  ClaimResult tab{"partitions/tableaux", Status::pass, {range("n", 1, 8)}, {}, "", 0};
  for (int n = 1; n <= 8; ++n)
    young::for_each_partition(n, [&](const young::Partition& p) {
      if (young::hook_degree(p) != static_cast<unsigned long>(young::count_standard_tableaux(p)))
        tab.failures.push_back(p.to_string());
    });

  ClaimResult br{"partitions/branching", Status::pass, {range("n", 1, 10)}, {},
                 "induction over addable and restriction over removable nodes", 0};
  for (int n = 1; n <= 10; ++n)
    young::for_each_partition(n, [&](const young::Partition& p) {
      auto nodes = young::boundary_nodes(p);
      BigInt up = 0, down = 0;
      for (auto node : nodes.addable) up += young::hook_degree(young::add_node(p, node));
      for (auto node : nodes.removable) down += young::hook_degree(young::remove_node(p, node));
      BigInt d = young::hook_degree(p);
      if (up != (n + 1) * d || (n > 1 && down != d)) br.failures.push_back(p.to_string());
    });

  ClaimResult cnt{"partitions/count", Status::pass, {range("n", 0, 30)}, {},
                  "enumeration against the pentagonal recurrence", 0};
  for (int n = 0; n <= 30; ++n) {
    unsigned long seen = 0;
    if (n > 0) young::for_each_partition(n, [&](const young::Partition&) { ++seen; });
    else seen = 1;
    if (young::partition_count(n) != seen) cnt.failures.push_back("n=" + std::to_string(n));
  }
  return {finish(sum), finish(tab), finish(br), finish(cnt)};
}

// ---- symmetric and alternating groups ----

std::vector<ClaimResult> symalt_degree_claims(const Context& ctx) {
  ClaimResult sums{"symalt/degree-sums", Status::pass, {range("n", 2, 12)}, {}, "", 0};
  for (int n = 2; n <= 12; ++n) {
    BigInt f = exact::factorial(static_cast<unsigned long>(n));
    if (symalt::sn_degrees(n).sum_of_squares() != f || symalt::an_degrees(n).sum_of_squares() * 2 != f)
      sums.failures.push_back("n=" + std::to_string(n));
  }
  unsigned hi = ctx.config.an_epsilon_max;
  ClaimResult eps{"symalt/an-epsilon", Status::pass, {range("n", 5, hi)}, {},
                  "epsilon(A_n) > 1 with |S| > 2b^2 and |S| < 2e^2", 0};
  for (unsigned n = 5; n <= hi; ++n) {
    auto rep = bounds::simple_bound_report(symalt::an_degrees(static_cast<int>(n)));
    if (!rep.epsilon_gt_1 || !rep.gt_2b2 || !rep.lt_2e2.value_or(false) || !rep.implication_holds)
      eps.failures.push_back("n=" + std::to_string(n));
  }
  return {finish(sums), finish(eps)};
}

std::vector<ClaimResult> rho_claims(const Context& ctx) {
  const Config& c = ctx.config;
  auto rep = symalt::verify_rho_growth(c.n_direct_max, c.n_induct_max, c.spot_checks, c.jobs);

  ClaimResult direct{"symalt/rho-direct", Status::pass, {}, {}, "rho(A_n)^8 * 8 > (n!)^3", 0};
  if (c.n_direct_max >= 7) direct.witnesses.push_back(range("n", 7, c.n_direct_max));
  for (int n : rep.direct_failures) direct.failures.push_back("n=" + std::to_string(n));

  ClaimResult induct{"symalt/rho-induction", Status::pass, {}, {},
                     "quotient, difference and refined inequalities by interval arithmetic", 0};
  if (c.n_induct_max >= 75) induct.witnesses.push_back(range("n", 75, c.n_induct_max));
  for (long n : c.spot_checks) induct.witnesses.push_back("n=" + std::to_string(n));
  bool inconclusive = false;
  for (const auto& w : rep.induct_failures) {
    induct.failures.push_back("n=" + std::to_string(w.n) + " " + symalt::to_string(w.inequality) +
                              " " + exact::to_string(w.verdict));
    inconclusive = inconclusive || w.verdict == exact::Verdict::inconclusive;
  }
  bool hard_fail = std::any_of(rep.induct_failures.begin(), rep.induct_failures.end(),
                               [](const auto& w) { return w.verdict == exact::Verdict::fails; });
  if (!hard_fail && inconclusive) induct.status = Status::inconclusive;

  ClaimResult gap{"symalt/rho-gap", Status::out_of_scope, {}, {},
                  "n between the direct range and 75: covered by neither check; inequalities "
                  "evaluated for information",
                  0};
  if (!rep.gap_all_hold.empty() || !rep.gap_failures.empty())
    gap.witnesses.push_back(range("n", c.n_direct_max + 1, 74));
  for (long n : rep.gap_all_hold) gap.witnesses.push_back("holds n=" + std::to_string(n));
  for (const auto& w : rep.gap_failures)
    gap.failures.push_back("n=" + std::to_string(w.n) + " " + symalt::to_string(w.inequality) +
                           " " + exact::to_string(w.verdict));
  return {finish(direct), finish(induct), gap};
}

// ---- PSL2 ----

std::vector<ClaimResult> psl2_claims(const Context& ctx) {
  const auto max_q = ctx.config.psl2_max_q;
  auto qs = prime_powers(4, max_q);
  ClaimResult sums{"psl2/degree-sums", Status::pass, {range("q", 4, static_cast<long>(max_q))}, {},
                   "prime powers only", 0};
  ClaimResult bmax{"psl2/max-degree", Status::pass, {range("q", 5, static_cast<long>(max_q))}, {},
                   "b in {q, q+1}", 0};
  ClaimResult sb{"psl2/simple-bounds", Status::pass, {range("q", 5, static_cast<long>(max_q))}, {},
                 "epsilon > 1, |S| > 2b^2 and |S| < 2e^2", 0};
  for (auto q : qs) {
    auto ds = psl2::psl2_degrees(q);
    if (ds.sum_of_squares() != psl2::psl2_order(q)) sums.failures.push_back("q=" + std::to_string(q));
    if (q < 5) continue;
    const BigInt& b = ds.max_degree();
    if (b != big(q) && b != big(q + 1)) bmax.failures.push_back("q=" + std::to_string(q));
    auto rep = bounds::simple_bound_report(ds);
    if (!rep.epsilon_gt_1 || !rep.gt_2b2 || !rep.lt_2e2.value_or(false) || !rep.implication_holds)
      sb.failures.push_back("q=" + std::to_string(q));
  }

  unsigned fmax = ctx.config.psl2_even_f_max;
  ClaimResult even{"psl2/even-witness", Status::pass, {range("f", 3, fmax)}, {},
                   "invariant under every field automorphism, degree q-1 or q+1", 0};
  for (unsigned f = 3; f <= fmax; ++f) {
    std::uint64_t q = 1ULL << f;
    auto w = psl2::extendible_witness_even(q);
    bool ok = w.degree() == big(f % 2 ? q - 1 : q + 1);
    for (unsigned k = 1; k <= f; ++k) ok = ok && psl2::field_invariance(w, k);
    if (!ok) even.failures.push_back("f=" + std::to_string(f));
  }

  ClaimResult stab{"psl2/theta2-stabilizer", Status::pass,
                   {range("q", 5, static_cast<long>(max_q)) + " odd"}, {}, "", 0};
  for (auto q : qs)
    if (q % 2 && q >= 5 && !psl2::theta2_stabilizer_odd(q).passed())
      stab.failures.push_back("q=" + std::to_string(q));
  return {finish(sums), finish(bmax), finish(sb), finish(even), finish(stab)};
}

// ---- Lie type ----

std::vector<ClaimResult> lie38_claims(const Context& ctx) {
  const auto& c = ctx.config;
  ClaimResult r{"lie/steinberg-38", Status::pass,
                {"rank<=" + std::to_string(c.lie_max_rank) + " q<=" + std::to_string(c.lie_max_q)},
                {}, "type A rank 1 excluded", 0};
  std::size_t checked = 0;
  for (const auto& id : lie::lie_grid(c.lie_max_rank, c.lie_max_q)) {
    if (id.family == lie::Family::A && id.rank == 1) continue;
    ++checked;
    if (!lie::verify_lie_38(id)) r.failures.push_back(id.to_string());
  }
  r.witnesses.push_back("groups=" + std::to_string(checked));
  return {finish(r)};
}

std::vector<ClaimResult> seitz_claims(const Context& ctx) {
  ClaimResult split{"lie/seitz-untwisted", Status::pass, {}, {}, "|T| = (q-1)^rank", 0};
  ClaimResult twisted{"lie/seitz-twisted", Status::pass, {}, {}, "", 0};
  for (const auto& id : lie::seitz_list()) {
    if (lie::is_untwisted_classical(id.family)) {
      split.witnesses.push_back(id.to_string());
      if (!lie::seitz_check(id, lie::split_torus_order(id)).passes_2b2)
        split.failures.push_back(id.to_string());
    } else if (ctx.torus) {
      twisted.witnesses.push_back(id.to_string());
      auto it = ctx.torus->find(lie::torus_key(id));
      if (it == ctx.torus->end()) {
        twisted.failures.push_back(id.to_string() + " missing from torus table");
        continue;
      }
      try {
        if (!lie::seitz_check(id, it->second).passes_2b2) twisted.failures.push_back(id.to_string());
      } catch (const std::invalid_argument& e) {
        twisted.failures.push_back(id.to_string() + " " + e.what());
      }
    }
  }
  if (!ctx.torus) {
    twisted.status = Status::out_of_scope;
    twisted.note = "no torus table supplied";
  } else {
    twisted.note = "torus orders from the supplied table";
  }
  return {finish(split), finish(twisted)};
}

std::vector<ClaimResult> situation_claims(const Context& ctx) {
  const auto& c = ctx.config;
  ClaimResult sit{"lie/situation-ratios", Status::pass,
                  {range("n", c.situation_n_min, c.situation_n_max),
                   "r=" + std::to_string(c.situation_r), "dk<=" + std::to_string(c.situation_max_dk)},
                  {}, "ratio > 81/320 for (i)-(iii), > 81/272 for (iv)", 0};
  std::size_t count = 0;
  for (unsigned n = c.situation_n_min; n <= c.situation_n_max; ++n)
    for (const auto& inst : lie::enumerate_situations(n, c.situation_r, c.situation_max_dk)) {
      ++count;
      Rational ratio = lie::situation_ratio(inst.shape, inst.i, inst.j, inst.situation);
      if (!(ratio > lie::situation_threshold(inst.situation)))
        sit.failures.push_back(inst.shape.to_string() + " (" + std::to_string(inst.i) + "," +
                               std::to_string(inst.j) + ") " + lie::to_string(inst.situation));
    }
  sit.witnesses.push_back("instances=" + std::to_string(count));
  if (count == 0) {
    sit.status = Status::fail;
    sit.note += "; no instances enumerated";
  }

  ClaimResult shape{"lie/shape-bound", Status::pass,
                    {"n=9..11", "r<=3", "shapes=" + std::to_string(c.random_shapes),
                     "seed=" + std::to_string(c.seed)},
                    {}, "chi(1) < 9*2^(n(n-1)) and |S|/chi(1)^2 > 2", 0};
  std::mt19937_64 rng(c.seed);
  for (unsigned t = 0; t < c.random_shapes; ++t) {
    unsigned n = 9 + t % 3;
    bool plus = (t / 3) % 2 == 0;
    auto s = lie::random_orthogonal_shape(rng, n, plus, 3);
    BigInt chi = lie::semisimple_degree(s);
    BigInt bound = 9 * exact::pow(2, static_cast<unsigned long>(n) * (n - 1));
    BigInt order = lie::ambient_order(s.ambient, n);
    if (!(chi < bound) || !(order > 2 * chi * chi)) shape.failures.push_back(s.to_string());
  }

  ClaimResult tail{"lie/euler-tail", Status::pass, {"q=2..10", "start=2", "terms=40"}, {},
                   "lower bound > 9/16", 0};
  for (std::uint64_t q = 2; q <= 10; ++q)
    if (!(lie::euler_tail_lower(q, 2, 40) > Rational(9, 16)))
      tail.failures.push_back("q=" + std::to_string(q));
  return {finish(sit), finish(shape), finish(tail)};
}

// ---- GF(2) polynomials ----

std::vector<ClaimResult> poly_claims(const Context&) {
  using gf2::CountMode;
  ClaimResult field{"gf2/field-count", Status::pass, {range("d", 1, 20)}, {},
                    "sum over e | d of e*n_e = 2^d", 0};
  for (unsigned d = 1; d <= 20; ++d) {
    BigInt total = 0;
    for (unsigned e = 1; e <= d; ++e)
      if (d % e == 0) total += e * gf2::count_irreducible_monic(e);
    if (total != exact::pow(2, d)) field.failures.push_back("d=" + std::to_string(d));
  }

  ClaimResult irr{"gf2/irreducible-count", Status::pass, {range("d", 1, 16)}, {},
                  "Moebius formula against exhaustive irreducibility tests", 0};
  for (unsigned d = 1; d <= 16; ++d)
    if (gf2::count_irreducible_monic(d) != static_cast<unsigned long>(gf2::count_irreducible_brute(d)))
      irr.failures.push_back("d=" + std::to_string(d));

  ClaimResult table{"gf2/self-reciprocal-table", Status::pass, {range("d", 1, 8)}, {},
                    "S2(1..7) = 1,1,1,2,3,5,9 and S2(8) >= 16", 0};
  const unsigned expect[] = {1, 1, 1, 2, 3, 5, 9};
  for (unsigned d = 1; d <= 7; ++d)
    if (gf2::count_self_reciprocal(d, CountMode::formula) != expect[d - 1])
      table.failures.push_back("d=" + std::to_string(d));
  if (gf2::count_self_reciprocal(8, CountMode::formula) < 16) table.failures.push_back("d=8");

  ClaimResult brute{"gf2/self-reciprocal-brute", Status::pass, {range("d", 1, 10)}, {},
                    "formula against enumeration of degree-2d irreducibles", 0};
  for (unsigned d = 1; d <= 10; ++d)
    if (gf2::count_self_reciprocal(d, CountMode::formula) !=
        gf2::count_self_reciprocal(d, CountMode::brute_force))
      brute.failures.push_back("d=" + std::to_string(d));

  ClaimResult even{"gf2/even-degree", Status::pass, {range("d", 2, 16)}, {},
                   "self-reciprocal irreducibles of degree > 1 have even degree", 0};
  for (unsigned d = 3; d <= 15; d += 2)
    for (const auto& f : gf2::irreducibles_of_degree(d))
      if (gf2::is_self_reciprocal(f)) even.failures.push_back(f.to_hex());

  ClaimResult lower{"gf2/nd-lower-bound", Status::pass, {range("d", 3, 30)}, {},
                    "4*d*n_d >= 3*2^d", 0};
  for (unsigned d = 3; d <= 30; ++d)
    if (4 * d * gf2::count_irreducible_monic(d) < 3 * exact::pow(2, d))
      lower.failures.push_back("d=" + std::to_string(d));

  ClaimResult closed{"gf2/closed-set", Status::pass, {range("d0", 1, 10)}, {},
                     "|F_d0| >= n_d0 / 2", 0};
  for (unsigned d0 = 1; d0 <= 10; ++d0)
    if (2 * BigInt(static_cast<unsigned long>(gf2::reciprocal_closed_set(d0).size())) <
        gf2::count_irreducible_monic(d0))
      closed.failures.push_back("d0=" + std::to_string(d0));
  return {finish(field), finish(irr), finish(table), finish(brute), finish(even), finish(lower),
          finish(closed)};
}

// ---- explicit groups ----

std::vector<ClaimResult> example_claims(const Context&) {
  using groups::ExampleKind;
  ClaimResult orders{"groups/example-orders", Status::pass, {"q=2..9 prime powers"}, {},
                     "q^3(q-1) for isaacs_K and p_semidirect_L, q^3 for heisenberg", 0};
  ClaimResult gamma{"groups/gamma-orders", Status::pass, {"q=2..9 prime powers"}, {},
                    "|Gamma| = f q^3 (q-1); closure only", 0};
  for (auto q : prime_powers(2, 9)) {
    auto pp = *exact::as_prime_power(q);
    std::uint64_t kq = q * q * q * (q - 1);
    for (auto kind : {ExampleKind::isaacs_K, ExampleKind::p_semidirect_L, ExampleKind::heisenberg}) {
      auto g = groups::build_example_group(kind, static_cast<unsigned>(q));
      std::uint64_t expect = kind == ExampleKind::heisenberg ? q * q * q : kq;
      if (g.order() != expect) orders.failures.push_back(groups::to_string(kind) + " q=" + std::to_string(q));
    }
    auto gm = groups::build_gamma(static_cast<unsigned>(q));
    if (gm.order() != kq * pp.exponent) gamma.failures.push_back("q=" + std::to_string(q));
  }
  auto h3 = groups::build_example_group(ExampleKind::heisenberg, 3);
  if (groups::exponent(h3) != 3) orders.failures.push_back("heisenberg q=3 exponent");
  return {finish(orders), finish(gamma)};
}

std::vector<ClaimResult> equality_family_claims(const Context& ctx) {
  ClaimResult fam{"groups/equality-family", Status::pass, {}, {},
                  "character of degree q(q-1) once, Gagola with unique minimal normal subgroup of "
                  "order q, e = q, |G| = e^4 - e^3, |P:N| = e^2, d = e(|N|-1)",
                  0};
  ClaimResult solv{"groups/witnesses-solvable", Status::pass, {}, {},
                   "derived series of each equality witness reaches 1", 0};
  for (unsigned q : ctx.config.gagola_q) {
    std::string w = "q=" + std::to_string(q);
    fam.witnesses.push_back(w);
    solv.witnesses.push_back(w);
    try {
      auto g = groups::build_example_group(groups::ExampleKind::isaacs_K, q);
      auto pp = *exact::as_prime_power(q);
      std::uint64_t d = q * (q - 1);
      auto t = chars::dixon_character_table(g);
      auto gr = chars::gagola_analyze(g, t);
      BigInt order = big(g.order());
      auto dec = bounds::e_of(order, big(d));
      auto e4 = bounds::verify_e4_bound(dec);
      bool ok = g.order() == q * q * q * (q - 1) && t.degree_multiset().multiplicity(big(d)) == 1 &&
                gr.is_gagola && gr.character_degree == d && gr.minimal_normal_order == q &&
                dec.e == q && e4.holds && e4.slack == 0;
      if (ok) {
        auto sylow = groups::p_elements(g, pp.prime);
        auto arith = bounds::gagola_arithmetic(order, big(d), big(*gr.minimal_normal_order),
                                               pp.prime, big(sylow.size()));
        ok = groups::is_subgroup(g, sylow) && arith.passed();
      }
      if (!ok) fam.failures.push_back(w);
      if (!groups::is_solvable(g)) solv.failures.push_back(w);
    } catch (const std::exception& e) {
      fam.failures.push_back(w + " " + e.what());
      solv.failures.push_back(w + " " + e.what());
    }
  }
  if (ctx.spec_group) {
    auto gr = chars::gagola_analyze(*ctx.spec_group);
    std::string w = "group-spec order=" + std::to_string(ctx.spec_group->order()) +
                    " gagola=" + (gr.is_gagola ? "yes" : "no");
    if (gr.character_degree) w += " degree=" + std::to_string(*gr.character_degree);
    if (gr.minimal_normal_order) w += " N=" + std::to_string(*gr.minimal_normal_order);
    fam.witnesses.push_back(w);
  }
  return {finish(fam), finish(solv)};
}

std::vector<ClaimResult> oracle_claims(const Context&) {
  ClaimResult r{"groups/table-oracle", Status::pass, {}, {},
                "sum of squares, degree divisibility, row and column orthogonality", 0};
  for (const auto& [name, build] : oracle_groups()) {
    r.witnesses.push_back(name);
    try {
      auto g = build();
      auto t = chars::dixon_character_table(g);
      if (!chars::check_table(t).passed()) r.failures.push_back(name);
    } catch (const std::exception& e) {
      r.failures.push_back(name + " " + e.what());
    }
  }
  return {finish(r)};
}

// ---- e-invariant arithmetic ----

std::vector<ClaimResult> bounds_claims(const Context&) {
  ClaimResult trip{"bounds/e-round-trip", Status::pass, {"order=1..10000", "d | order, d^2 <= order"},
                   {}, "d(d+e) = order", 0};
  for (unsigned long n = 1; n <= 10000; ++n)
    for (unsigned long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      auto dec = bounds::e_of(BigInt(n), BigInt(d));
      if (dec.d * (dec.d + dec.e) != n) trip.failures.push_back(std::to_string(n) + "/" + std::to_string(d));
    }

  ClaimResult fam{"bounds/equality-arithmetic", Status::pass, {"q prime power 2..100"}, {},
                  "e_of(q^3(q-1), q(q-1)) = q with slack 0", 0};
  for (auto q : prime_powers(2, 100)) {
    BigInt Q = big(q);
    auto dec = bounds::e_of(Q * Q * Q * (Q - 1), Q * (Q - 1));
    bool ok = dec.e == Q;
    if (ok && q > 1 && dec.e > 1) ok = bounds::verify_e4_bound(dec).slack == 0;
    if (!ok) fam.failures.push_back("q=" + std::to_string(q));
  }

  // Products of two simple groups from the degree data.
  ClaimResult comp{"bounds/composition", Status::pass, {}, {}, "e_min > 2 sqrt(bN bQ)", 0};
  std::vector<std::pair<std::string, DegreeMultiset>> simples;
  for (auto q : prime_powers(5, 31)) simples.emplace_back("PSL2(" + std::to_string(q) + ")", psl2::psl2_degrees(q));
  for (int n = 5; n <= 10; ++n) simples.emplace_back("A" + std::to_string(n), symalt::an_degrees(n));
  for (std::size_t a = 0; a < simples.size(); ++a)
    for (std::size_t b = a; b < simples.size(); ++b) {
      auto da = bounds::e_of(simples[a].second.sum_of_squares(), simples[a].second.max_degree());
      auto db = bounds::e_of(simples[b].second.sum_of_squares(), simples[b].second.max_degree());
      auto rep = bounds::composition_bound(da.d, da.e, db.d, db.e);
      if (!rep.exceeds_2sqrt) comp.failures.push_back(simples[a].first + "x" + simples[b].first);
    }
  comp.witnesses.push_back("pairs from PSL2(q) q=5..31 and A5..A10");

  ClaimResult imp{"bounds/epsilon-implication", Status::pass, {}, {},
                  "epsilon > 1 implies e > b, |S| > 2b^2 and |S| < 2e^2", 0};
  std::size_t checked = 0, with_eps = 0;
  auto check = [&](const std::string& name, const DegreeMultiset& ds) {
    auto rep = bounds::simple_bound_report(ds);
    ++checked;
    with_eps += rep.epsilon_gt_1;
    if (!rep.implication_holds) imp.failures.push_back(name);
  };
  for (auto q : prime_powers(4, 1000)) check("PSL2(" + std::to_string(q) + ")", psl2::psl2_degrees(q));
  for (int n = 2; n <= 20; ++n) {
    check("S" + std::to_string(n), symalt::sn_degrees(n));
    check("A" + std::to_string(n), symalt::an_degrees(n));
  }
  imp.witnesses.push_back("multisets=" + std::to_string(checked));
  imp.witnesses.push_back("epsilon>1=" + std::to_string(with_eps));
  return {finish(trip), finish(fam), finish(comp), finish(imp)};
}

std::vector<ClaimResult> record_claims(const Context& ctx) {
  std::vector<ClaimResult> out;
  for (const auto& [path, recs] : ctx.records) {
    ClaimResult r{"records/" + path, Status::pass, {}, {},
                  "ingested records; epsilon implication on each", 0};
    for (const auto& rec : recs) {
      r.witnesses.push_back(rec.name);
      if (!bounds::simple_bound_report(rec.degrees).implication_holds) r.failures.push_back(rec.name);
    }
    out.push_back(finish(r));
  }
  return out;
}

struct SectionTasks {
  std::string section;
  Task task;
};

std::vector<SectionTasks> all_tasks() {
  return {
      {"partitions", partition_claims},   {"rho", symalt_degree_claims},
      {"rho", rho_claims},                {"psl2", psl2_claims},
      {"lie38", lie38_claims},            {"seitz", seitz_claims},
      {"situations", situation_claims},   {"poly", poly_claims},
      {"gagola", example_claims},         {"gagola", equality_family_claims},
      {"gagola", oracle_claims},          {"bounds", bounds_claims},
      {"records", record_claims},
  };
}

}  // namespace

std::vector<std::pair<std::string, std::function<groups::GroupTable()>>> oracle_groups() {
  using groups::ExampleKind;
  auto perm_group = [](unsigned n, std::vector<std::vector<int>> gens) {
    std::vector<groups::GroupElement> els;
    for (auto& g : gens) els.push_back({std::move(g), 0});
    return groups::close_group(groups::Representation::permutations(n), els);
  };
  return {
      {"C1", [] { return groups::cyclic_group(1); }},
      {"C3", [] { return groups::cyclic_group(3); }},
      {"C8", [] { return groups::cyclic_group(8); }},
      {"C2xC2", [perm_group] { return perm_group(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}); }},
      {"D8", [] { return groups::dihedral_group(4); }},
      {"D10", [] { return groups::dihedral_group(5); }},
      {"D12", [] { return groups::dihedral_group(6); }},
      {"Q8", [] { return groups::quaternion8(); }},
      {"A4", [] { return groups::alternating_group(4); }},
      {"S4", [] { return groups::symmetric_group(4); }},
      {"SL2(3)", [] { return groups::sl2(3); }},
      {"A5", [] { return groups::alternating_group(5); }},
      {"S5", [] { return groups::symmetric_group(5); }},
      {"GL2(3)", [] { return groups::gl2(3); }},
      {"SL3(2)", [] { return groups::sl3_2(); }},
      {"heisenberg(3)", [] { return groups::build_example_group(ExampleKind::heisenberg, 3); }},
      {"heisenberg(5)", [] { return groups::build_example_group(ExampleKind::heisenberg, 5); }},
      {"isaacs_K(4)", [] { return groups::build_example_group(ExampleKind::isaacs_K, 4); }},
      {"isaacs_K(5)", [] { return groups::build_example_group(ExampleKind::isaacs_K, 5); }},
      {"p_semidirect_L(3)", [] { return groups::build_example_group(ExampleKind::p_semidirect_L, 3); }},
  };
}

Run verify_all(const Config& config) {
  for (const auto& s : config.sections)
    if (std::find(kSections.begin(), kSections.end(), s) == kSections.end())
      throw ConfigError("unknown section: " + s);
  if (config.n_direct_max < 7 || config.n_direct_max > symalt::kMaxDirectN)
    throw ConfigError("n_direct_max must lie in 7..60");
  if (config.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (config.psl2_max_q < 5) throw ConfigError("psl2 range must reach q = 5");
  if (config.situation_n_min > config.situation_n_max) throw ConfigError("empty situation range");
  for (unsigned q : config.gagola_q)
    if (q > 5 || !exact::as_prime_power(q)) throw ConfigError("gagola q must be a prime power <= 5");

  Context ctx{config, std::nullopt, {}, std::nullopt};
  if (config.torus_table) ctx.torus = lie::load_torus_table(*config.torus_table);
  for (const auto& path : config.degree_files) {
    try {
      ctx.records.emplace_back(path, records::ingest_degree_records(path));
    } catch (const ParseError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  if (config.group_spec) ctx.spec_group = groups::load_group_spec(*config.group_spec);

  std::vector<Task> tasks;
  for (auto& st : all_tasks())
    if (config.sections.empty() || config.sections.count(st.section)) tasks.push_back(st.task);

  std::vector<std::vector<ClaimResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      try {
        slots[i] = tasks[i](ctx);
      } catch (const std::exception& e) {
        slots[i] = {ClaimResult{"task-error", Status::fail, {}, {e.what()}, "uncaught exception", 0}};
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      // Claims sharing a task share its time evenly.
      for (auto& r : slots[i]) r.seconds = secs / static_cast<double>(slots[i].size());
    }
  };
  unsigned threads = std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Run run;
  for (auto& s : slots)
    for (auto& r : s) run.results.push_back(std::move(r));
  return run;
}

std::string report_json(const Run& run, bool include_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : run.results) {
    nlohmann::json j;
    j["claim"] = r.id;
    j["status"] = to_string(r.status);
    j["witnesses"] = r.witnesses;
    j["failures"] = r.failures;
    j["note"] = r.note;
    if (include_timing) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace chardeg::verify
