#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chardeg/errors.hpp"
#include "chardeg/groups.hpp"

using namespace chardeg;
using namespace chardeg::groups;

namespace {

std::vector<std::size_t> class_sizes(const GroupTable& g) {
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Class count by Burnside: the number of commuting pairs divided by |G|.
std::size_t commuting_pairs_over_order(const GroupTable& g) {
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) pairs += g.mul(a, b) == g.mul(b, a);
  return pairs / g.order();
}

}  // namespace

TEST_CASE("closure basics") {
  auto rep = Representation::permutations(3);
  auto triv = close_group(rep, {identity_element(rep)});
  CHECK(triv.order() == 1);
  CHECK(conjugacy_classes(triv).size() == 1);
  CHECK(close_group(rep, {}).order() == 1);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(5).order() == 60);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(sl2(3).order() == 24);
  CHECK(gl2(3).order() == 48);
  CHECK(sl3_2().order() == 168);
  CHECK(quaternion8().order() == 8);
  CHECK(cyclic_group(7).order() == 7);
}

TEST_CASE("bad generators and resource bound") {
  auto rep = Representation::permutations(3);
  CHECK_THROWS_AS(close_group(rep, {{{0, 0, 1}, 0}}), std::invalid_argument);
  auto F = std::make_shared<const FiniteField>(3, 1);
  auto mrep = Representation::matrices(F, 2);
  CHECK_THROWS_AS(close_group(mrep, {{{1, 2, 2, 1}, 0}}), std::invalid_argument);  // det 0
  CHECK_THROWS_AS(close_group(mrep, {{{1, 5, 0, 1}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(close_group(Representation::permutations(7),
                              {{{1, 2, 3, 4, 5, 6, 0}, 0}, {{1, 0, 2, 3, 4, 5, 6}, 0}}, 1000),
                  ResourceLimitError);
}

TEST_CASE("table consistency") {
  auto g = gl2(3);
  REQUIRE(g.has_table());
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.index_of(g.element(a)) == a);
    CHECK(g.pow(a, g.element_order(a)) == g.identity());
    for (std::size_t b = 0; b < g.order(); b += 5)
      for (std::size_t c = 0; c < g.order(); c += 7)
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  CHECK(exponent(g) == 24);
}

TEST_CASE("conjugacy classes") {
  auto h2 = build_example_group(ExampleKind::heisenberg, 2);
  CHECK(h2.order() == 8);
  CHECK(class_sizes(h2) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  auto s4 = symmetric_group(4);
  CHECK(class_sizes(s4) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  for (auto* make : {+[] { return sl3_2(); }, +[] { return gl2(3); }, +[] { return symmetric_group(5); }}) {
    auto g = make();
    auto cls = conjugacy_classes(g);
    CHECK(cls.size() == commuting_pairs_over_order(g));
    std::size_t total = 0;
    for (const auto& c : cls) {
      CHECK(g.order() % c.size() == 0);
      total += c.size();
    }
    CHECK(total == g.order());
    CHECK(cls[0] == std::vector<std::size_t>{0});
  }
}

TEST_CASE("subgroups and series") {
  auto s4 = symmetric_group(4);
  CHECK(derived_series_orders(s4) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(is_solvable(s4));
  CHECK(!is_solvable(alternating_group(5)));
  CHECK(derived_series_orders(alternating_group(5)) == std::vector<std::size_t>{60});
  auto two = p_elements(s4, 2);
  CHECK(two.size() == 16);  // identity, 9 involutions, 6 four-cycles
  CHECK(!is_subgroup(s4, two));
  auto a4 = alternating_group(4);
  auto v4 = p_elements(a4, 2);
  CHECK(v4.size() == 4);
  CHECK(is_subgroup(a4, v4));
  CHECK(generated_subgroup(s4, {1}).size() == s4.element_order(1));
}

TEST_CASE("example matrix groups") {
  CHECK(build_example_group(ExampleKind::isaacs_K, 2).order() == 8);
  CHECK(build_example_group(ExampleKind::isaacs_K, 3).order() == 54);
  CHECK(build_example_group(ExampleKind::isaacs_K, 4).order() == 192);
  auto h3 = build_example_group(ExampleKind::heisenberg, 3);
  CHECK(h3.order() == 27);
  CHECK(exponent(h3) == 3);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto k = build_example_group(ExampleKind::isaacs_K, q);
    CHECK(k.order() == q * q * q * (q - 1));
    CHECK(build_example_group(ExampleKind::p_semidirect_L, q).order() == k.order());
    CHECK(build_example_group(ExampleKind::heisenberg, q).order() == q * q * q);
    for (std::size_t i = 0; i < k.order(); ++i) REQUIRE(has_isaacs_form(k, i));
  }
  CHECK_THROWS_AS(build_example_group(ExampleKind::isaacs_K, 11), ResourceLimitError);
  CHECK_THROWS_AS(build_example_group(ExampleKind::isaacs_K, 6), std::invalid_argument);
  CHECK(build_gamma(4).order() == 2 * 192);
  CHECK(build_gamma(8).order() == 3 * 8 * 8 * 8 * 7);
  CHECK(build_gamma(5).order() == 500);
}

TEST_CASE("semilinear multiplication twists by the Frobenius") {
  auto F = std::make_shared<const FiniteField>(2, 2);
  auto rep = Representation::semilinear(F, 1);
  GroupElement a{{2}, 0}, s{{1}, 1};
  // (1, sigma)(a, 0)(1, sigma)^-1 = (sigma(a), 0).
  auto conj = multiply(rep, multiply(rep, s, a), s);
  CHECK(conj.frob == 0);
  CHECK(static_cast<unsigned>(conj.data[0]) == F->frobenius(2));
}

TEST_CASE("group specification files") {
  auto g = parse_group_spec(R"({"kind":"permutation","degree":4,"generators":[[1,2,3,0],[1,0,2,3]]})");
  CHECK(g.order() == 24);
  auto m = parse_group_spec(
      R"({"kind":"matrix","field":{"p":2,"f":1},"dimension":3,
          "generators":[[[1,1,0],[0,1,0],[0,0,1]],[[1,0,0],[0,1,1],[0,0,1]]]})");
  CHECK(m.order() == 8);
  CHECK_THROWS_AS(parse_group_spec("{"), ConfigError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"braid"})"), ConfigError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"permutation","degree":2,"generators":[[0,0]]})"), ConfigError);
  CHECK_THROWS_AS(load_group_spec("/nonexistent/spec.json"), ConfigError);
}
