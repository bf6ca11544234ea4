#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chardeg/errors.hpp"
#include "chardeg/lie.hpp"

using namespace chardeg;
using namespace chardeg::lie;
using exact::BigInt;
using exact::Rational;

TEST_CASE("orders of familiar simple groups") {
  CHECK(simple_order({Family::A, 1, 7}) == 168);
  CHECK(simple_order({Family::A, 2, 2}) == 168);
  CHECK(simple_order({Family::A, 1, 4}) == 60);
  CHECK(simple_order({Family::A, 1, 9}) == 360);
  CHECK(simple_order({Family::A, 3, 2}) == 20160);
  CHECK(simple_order({Family::B, 2, 3}) == 25920);
  CHECK(simple_order({Family::C, 2, 3}) == 25920);
  CHECK(simple_order({Family::twistedA, 2, 3}) == 6048);
  CHECK(simple_order({Family::twistedA, 3, 2}) == 25920);
  CHECK(simple_order({Family::G2, 2, 3}) == 4245696);
  CHECK(simple_order({Family::twistedB2, 2, 8}) == 29120);
  CHECK(simple_order({Family::twistedG2, 2, 27}) == BigInt("10073444472"));
  CHECK(simple_order({Family::D, 4, 2}) == 174182400);
  CHECK(simple_order({Family::twistedD, 4, 2}) == 197406720);
  CHECK(simple_order({Family::triality3D4, 4, 2}) == 211341312);
  CHECK(simple_order({Family::F4, 4, 2}) == BigInt("3311126603366400"));
  CHECK(simple_order({Family::E6, 6, 2}) == BigInt("214841575522005575270400"));
  CHECK(simple_order({Family::twistedE6, 6, 2}) == BigInt("76532479683774853939200"));
  CHECK(simple_order({Family::E7, 7, 2}) == BigInt("7997476042075799759100487262680802918400"));
  CHECK(simple_order({Family::A, 2, 4}) == 20160);  // PSL3(4), centre of order 3
  CHECK(sc_order({Family::A, 2, 4}) == 60480);
}

TEST_CASE("validation of ids") {
  CHECK_THROWS_AS(validate({Family::A, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::A, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::B, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::G2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::twistedB2, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::D, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate({Family::A, 2, 6}), std::invalid_argument);
  CHECK(is_valid({Family::twistedB2, 2, 8}));
  CHECK(parse_family("2E6") == Family::twistedE6);
  CHECK(!parse_family("Z9"));
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("Steinberg 3/8 check") {
  CHECK(steinberg_degree({Family::D, 4, 2}) == 4096);
  CHECK(verify_lie_38({Family::D, 4, 2}));
  CHECK_THROWS_AS(verify_lie_38({Family::A, 1, 8}), ExcludedCaseError);
  std::size_t n = 0;
  for (const auto& id : lie_grid(12, 32)) {
    if (id.family == Family::A && id.rank == 1) continue;
    CHECK(verify_lie_38(id));
    CHECK(exact::p_part(simple_order(id), characteristic(id)) == steinberg_degree(id));
    ++n;
  }
  CHECK(n > 1000);
}

TEST_CASE("Seitz bound") {
  for (const auto& id : seitz_list()) {
    if (!is_untwisted_classical(id.family)) continue;
    CHECK(seitz_check(id, split_torus_order(id)).passes_2b2);
  }
  // The full group as "torus" leaves the trivial bound.
  SimpleGroupId a8{Family::A, 8, 3};
  CHECK(seitz_check(a8, sc_order(a8)).bound == 1);
  CHECK_THROWS_AS(seitz_check({Family::A, 3, 3}, 8), std::invalid_argument);
  CHECK_THROWS_AS(seitz_check(a8, sc_order(a8) + 1), std::invalid_argument);
  CHECK(in_seitz_list({Family::twistedD, 30, 3}));
  CHECK(!in_seitz_list({Family::twistedD, 31, 3}));
}

TEST_CASE("torus table file") {
  auto t = load_torus_table(CHARDEG_DATA_DIR "/torus_twisted.json");
  CHECK(t.at("2A/8/2") == 81);
  for (const auto& id : seitz_list()) {
    if (is_untwisted_classical(id.family)) continue;
    REQUIRE(t.count(torus_key(id)));
    CHECK(seitz_check(id, t.at(torus_key(id))).passes_2b2);
  }
  CHECK_THROWS_AS(load_torus_table("/nonexistent/torus.json"), ConfigError);
}

TEST_CASE("shape validation") {
  CentralizerShape ok{Ambient::OmegaPlus, 4, KKind::none, 0, {{2, 1, -1}, {2, 1, -1}}};
  CHECK_NOTHROW(validate(ok));
  CentralizerShape sign{Ambient::OmegaPlus, 4, KKind::none, 0, {{2, 1, -1}, {2, 1, 1}}};
  CHECK_THROWS_AS(validate(sign), std::invalid_argument);
  CentralizerShape dim{Ambient::SL, 5, KKind::none, 0, {{2, 1, 1}}};
  CHECK_THROWS_AS(validate(dim), std::invalid_argument);
  CentralizerShape twice{Ambient::Sp, 2, KKind::none, 0, {{1, 1, 1}, {1, 1, 1}}};
  CHECK_THROWS_AS(validate(twice), std::invalid_argument);
  CentralizerShape k{Ambient::Sp, 3, KKind::none, 1, {{2, 1, 1}}};
  CHECK_THROWS_AS(validate(k), std::invalid_argument);
  // Structurally fine but no pair of degree-1 eigenvalues exists over GF(2).
  CentralizerShape onep{Ambient::Sp, 3, KKind::Sp, 2, {{1, 1, 1}}};
  CHECK_NOTHROW(validate(onep));
  CHECK(!is_realizable(onep));
}

TEST_CASE("centralizer degrees") {
  // The trivial element: C = S, degree 1.
  CentralizerShape whole{Ambient::Sp, 3, KKind::Sp, 3, {}};
  CHECK(semisimple_degree(whole) == ambient_steinberg(Ambient::Sp, 3));
  CHECK(gl_order(1, 1, 1) == 1);
  CHECK(gl_order(1, 1, -1) == 3);
  CHECK(gl_order(2, 1, 1) == 6);
  CHECK(gl_order(2, 1, -1) == 18);
  CHECK(ambient_order(Ambient::SL, 3) == 168);
  CHECK(ambient_order(Ambient::Sp, 2) == 720);
  CHECK(ambient_order(Ambient::OmegaMinus, 3) == 25920);
  CHECK(ambient_order(Ambient::OmegaPlus, 3) == 20160);
}

TEST_CASE("random valid shapes: degree divides the ambient order") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10000; ++t) {
    auto s = random_valid_shape(rng, 14);
    REQUIRE_NOTHROW(validate(s));
    BigInt g = ambient_order(s.ambient, s.n);
    BigInt c = centralizer_order(s);
    REQUIRE(g % c == 0);
    BigInt d = semisimple_degree(s);
    REQUIRE(g % d == 0);
  }
}

TEST_CASE("random orthogonal shapes obey the degree bound") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    unsigned n = 9 + t % 3;
    auto s = random_orthogonal_shape(rng, n, t % 2 == 0, 3);
    CHECK(is_realizable(s));
    CHECK(s.factors.size() <= 3);
    BigInt chi = semisimple_degree(s);
    CHECK(chi < 9 * exact::pow(2ul, static_cast<unsigned long>(n) * (n - 1)));
    CHECK(ambient_order(s.ambient, n) > 2 * chi * chi);
  }
}

TEST_CASE("situations") {
  CHECK(situation_threshold(Situation::i) == Rational(81, 320));
  CHECK(situation_threshold(Situation::iv) == Rational(81, 272));
  std::size_t total = 0;
  for (unsigned n = 9; n <= 12; ++n)
    for (const auto& inst : enumerate_situations(n, 4, 6)) {
      ++total;
      auto t = situation_shape(inst.shape, inst.i, inst.j, inst.situation);
      unsigned long dim = t.m;
      for (const auto& f : t.factors) dim += static_cast<unsigned long>(f.d) * f.k;
      CHECK(dim == t.n);
      CHECK(t.n == inst.shape.n);
      CHECK(situation_ratio(inst.shape, inst.i, inst.j, inst.situation) >
            situation_threshold(inst.situation));
    }
  CHECK(total > 0);
  // Fewer than four factors.
  CentralizerShape few{Ambient::OmegaPlus, 9, KKind::OmegaMinus, 3, {{3, 1, 1}, {3, 1, -1}}};
  CHECK_THROWS_AS(situation_shape(few, 1, 2, Situation::i), std::invalid_argument);
  // d0 = 3 + 2 is odd.
  CentralizerShape odd{Ambient::OmegaPlus, 12, KKind::none, 0,
                       {{3, 1, 1}, {2, 1, -1}, {2, 2, 1}, {3, 1, -1}}};
  CHECK_THROWS_AS(situation_shape(odd, 1, 3, Situation::i), std::invalid_argument);
  CHECK_THROWS_AS(situation_shape(odd, 3, 4, Situation::iii), std::invalid_argument);
}

TEST_CASE("Euler tail") {
  for (std::uint64_t q = 2; q <= 10; ++q) {
    Rational prev = 0;
    double truth = 1;
    for (int i = 2; i < 400; ++i) truth *= 1 - std::pow(double(q), -i);
    for (unsigned t = 1; t <= 60; ++t) {
      Rational v = euler_tail_lower(q, 2, t);
      CHECK(v >= prev);
      CHECK(v.get_d() <= truth + 1e-12);
      prev = v;
    }
    CHECK(euler_tail_lower(q, 2, 40) > Rational(9, 16));
  }
  CHECK_THROWS_AS(euler_tail_lower(1, 2, 4), std::invalid_argument);
}
