#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>

#include "chardeg/cyclotomic.hpp"

using namespace chardeg::cyclo;

namespace {

std::complex<double> evaluate(const Cyclo& c) {
  std::complex<double> s = 0;
  for (auto [k, a] : c.terms()) s += static_cast<double>(a) * std::polar(1.0, 2 * M_PI * k / c.conductor());
  return s;
}

unsigned phi(unsigned n) {
  unsigned r = 0;
  for (unsigned k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  auto p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(*std::min_element(p105.begin(), p105.end()) == -2);
  for (unsigned n = 1; n <= 60; ++n) {
    const auto& p = cyclotomic_polynomial(n);
    CHECK(p.size() == phi(n) + 1);
    // Each primitive root is a zero.
    std::complex<double> z = std::polar(1.0, 2 * M_PI / n), v = 0, zk = 1;
    for (auto c : p) {
      v += static_cast<double>(c) * zk;
      zk *= z;
    }
    CHECK(std::abs(v) < 1e-8);
  }
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  for (unsigned n : {1u, 3u, 4u, 5u, 8u, 12u, 24u}) {
    Cyclo sum(n, 0);
    for (unsigned k = 0; k < n; ++k) sum += Cyclo::root(n, k);
    if (n > 1) CHECK(sum.is_zero());
    CHECK(sum.as_integer() == (n == 1 ? std::optional<std::int64_t>(1) : std::optional<std::int64_t>(0)));
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) {
        Cyclo x = Cyclo::root(n, a) * 3 + Cyclo(n, 1), y = Cyclo::root(n, b) - Cyclo::root(n, a + b);
        CHECK(std::abs(evaluate(x * y) - evaluate(x) * evaluate(y)) < 1e-9);
        CHECK(std::abs(evaluate(x.conj()) - std::conj(evaluate(x))) < 1e-9);
        CHECK(((x * x.conj()).reduced().size() <= phi(n)));
      }
  }
}

TEST_CASE("canonical forms and printing") {
  CHECK(Cyclo::root(4, 2) == Cyclo(4, -1));
  CHECK(Cyclo::root(3, 1) + Cyclo::root(3, 2) == Cyclo(3, -1));
  CHECK((Cyclo::root(5, 1) + Cyclo::root(5, 4)).as_integer() == std::nullopt);
  CHECK(Cyclo::root(6, -1) == Cyclo::root(6, 5));
  CHECK(Cyclo(7, 0).to_string() == "0");
  CHECK(Cyclo(7, -3).to_string() == "-3");
  CHECK(Cyclo::root(3, 1).to_string() == "E(3)");
  CHECK(Cyclo::from_dense(5, {0, 0, 2}).to_string() == "2*E(5)^2");
  CHECK(Cyclo::from_dense(5, {1, 1, 1, 1, 1}).is_zero());
  CHECK_THROWS(Cyclo::root(3, 1) + Cyclo::root(5, 1));
}
