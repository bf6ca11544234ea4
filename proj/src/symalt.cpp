#include "chardeg/symalt.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "chardeg/errors.hpp"

namespace chardeg::symalt {

using exact::RatInterval;
using young::Partition;

namespace {

void require_range(int n, int lo) {
  if (n < lo || n > kMaxDirectN)
    throw ResourceLimitError("n = " + std::to_string(n) + " outside supported range [" +
                             std::to_string(lo) + ", " + std::to_string(kMaxDirectN) + "]");
}

// Runs visit(first_part, partition) over all partitions of n, splitting the
// work by first part. Each worker owns one State; states are returned for a
// merge by the caller.
template <class State, class Visit>
std::vector<State> sweep(int n, unsigned jobs, Visit visit) {
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<State> states(workers);
  std::atomic<int> next_first{n};
  auto work = [&](State& st) {
    for (int f = next_first--; f >= 1; f = next_first--) {
      young::PartitionGenerator gen(n, f);
      while (auto p = gen.next()) visit(st, *p);
    }
  };
  if (workers == 1) {
    work(states[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(states[w]));
    for (auto& t : pool) t.join();
  }
  return states;
}

}  // namespace

DegreeMultiset sn_degrees(int n, unsigned jobs) {
  require_range(n, 1);
  auto states = sweep<DegreeMultiset>(n, jobs, [](DegreeMultiset& st, const Partition& p) {
    st.add(young::hook_degree(p));
  });
  DegreeMultiset out;
  for (const auto& s : states) out.merge(s);
  return out;
}

DegreeMultiset an_degrees(int n, unsigned jobs) {
  require_range(n, 1);
  if (n == 1) return DegreeMultiset({{1, 1}});
  auto states = sweep<DegreeMultiset>(n, jobs, [](DegreeMultiset& st, const Partition& p) {
    Partition c = young::conjugate(p);
    if (c == p) {
      BigInt d = young::hook_degree(p);
      if (d % 2 != 0)
        throw std::logic_error("odd degree on self-conjugate partition " + p.to_string());
      st.add(d / 2, 2);
    } else if (p > c) {
      st.add(young::hook_degree(p));
    }
  });
  DegreeMultiset out;
  for (const auto& s : states) out.merge(s);
  return out;
}

RhoValue rho_an_detail(int n, unsigned jobs) {
  require_range(n, 5);
  // Largest degree means smallest hook product; no division needed until the end.
  struct Best {
    bool have = false;
    BigInt product;
    Partition partition;
  };
  auto states = sweep<Best>(n, jobs, [](Best& st, const Partition& p) {
    if (young::is_self_conjugate(p)) return;
    BigInt h = young::hook_product(p);
    if (!st.have || h < st.product || (h == st.product && p > st.partition)) {
      st.have = true;
      st.product = std::move(h);
      st.partition = p;
    }
  });
  const Best* best = nullptr;
  for (const auto& s : states) {
    if (!s.have) continue;
    if (!best || s.product < best->product ||
        (s.product == best->product && s.partition > best->partition))
      best = &s;
  }
  if (!best) throw std::logic_error("no non-self-conjugate partition found");
  return {exact::factorial(static_cast<unsigned long>(n)) / best->product, best->partition};
}

bool rho_direct_holds(int n, const BigInt& rho) {
  BigInt lhs = exact::pow(rho, 8) * 8;
  BigInt rhs = exact::pow(exact::factorial(static_cast<unsigned long>(n)), 3);
  return lhs > rhs;
}

std::string to_string(Growth g) {
  switch (g) {
    case Growth::quotient:
      return "quotient";
    case Growth::difference:
      return "difference";
    case Growth::refined:
      return "refined";
  }
  return "?";
}

exact::ClaimOutcome check_growth(Growth g, long n, unsigned cap_bits) {
  if (n < 1) throw std::invalid_argument("growth inequalities need n >= 1");
  BigInt N(static_cast<unsigned long>(n));
  exact::IntervalClaim claim;
  claim.cap_bits = cap_bits;
  claim.evaluate = [g, N](unsigned bits) {
    RatInterval one = RatInterval::point(1);
    RatInterval np1 = RatInterval::point(Rational(N + 1));
    RatInterval s2n = exact::sqrt_interval(2 * N, bits);
    RatInterval s2n2 = exact::sqrt_interval(2 * N + 2, bits);
    RatInterval rhs = exact::root_interval(exact::pow(BigInt(N + 1), 3), 8, bits);
    RatInterval lhs;
    switch (g) {
      case Growth::quotient:
        lhs = np1 / (s2n + one);
        break;
      case Growth::difference:
        lhs = (np1 - s2n2) / s2n;
        break;
      case Growth::refined: {
        RatInterval n_m38 = exact::reciprocal(exact::root_interval(exact::pow(N, 3), 8, bits));
        RatInterval np2 = RatInterval::point(Rational(N + 2));
        lhs = (np2 - s2n2 - s2n * n_m38) / s2n;
        break;
      }
    }
    return std::make_pair(lhs, rhs);
  };
  return exact::decide_greater(claim);
}

RhoGrowthReport verify_rho_growth(int n_direct_max, long n_induct_max,
                                  std::vector<long> spot_checks, unsigned jobs) {
  if (n_direct_max > kMaxDirectN)
    throw ResourceLimitError("direct rho check is capped at n = " + std::to_string(kMaxDirectN));
  RhoGrowthReport rep;
  rep.direct_max = n_direct_max;
  rep.induct_max = n_induct_max;
  rep.spot_checks = std::move(spot_checks);

  for (int n = rep.direct_min; n <= n_direct_max; ++n) {
    RhoValue v = rho_an_detail(n, jobs);
    if (!rho_direct_holds(n, v.rho)) rep.direct_failures.push_back(n);
    rep.direct_values.push_back(std::move(v));
  }

  auto run = [&](long n, std::vector<GrowthWitness>& failures) {
    bool all = true;
    for (Growth g : kAllGrowth) {
      auto outcome = check_growth(g, n);
      if (outcome.verdict != exact::Verdict::holds) {
        failures.push_back({n, g, outcome.verdict});
        all = false;
      }
    }
    return all;
  };

  for (long n = rep.induct_min; n <= n_induct_max; ++n) {
    run(n, rep.induct_failures);
    ++rep.induct_checked;
  }
  for (long n : rep.spot_checks) {
    run(n, rep.induct_failures);
    ++rep.induct_checked;
  }
  for (long n = std::max<long>(n_direct_max + 1, 1); n < rep.induct_min; ++n) {
    if (run(n, rep.gap_failures)) rep.gap_all_hold.push_back(n);
  }
  return rep;
}

}  // namespace chardeg::symalt
