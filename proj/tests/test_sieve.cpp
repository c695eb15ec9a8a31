#include <cmath>
#include <random>
#include <stdexcept>

#include "corrsieve/sieve.hpp"
#include "corrsieve/util.hpp"
#include "doctest.h"

using namespace corrsieve;

namespace {

// Divisor enumeration by trial division; independent of the sieve path.
std::vector<uint64_t> divisors_of(uint64_t n) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    small.push_back(*it);
  return small;
}

const SpfTable& table100k() {
  static SpfTable t(100000);
  return t;
}

}  // namespace

TEST_CASE("build_spf basics") {
  SpfTable t(20);
  CHECK(t.spf(12) == 2);
  CHECK(t.spf(17) == 17);
  CHECK(t.spf(15) == 3);
  CHECK_THROWS_AS(SpfTable(1), std::invalid_argument);
}

TEST_CASE("spf invariants up to 10^5") {
  const SpfTable& t = table100k();
  for (uint64_t n = 2; n <= t.limit(); ++n) {
    uint64_t p = t.spf(n);
    CHECK(n % p == 0);
    CHECK(t.is_prime(p));
    if (p != n) CHECK((p * p <= n || t.is_prime(n / p)));
  }
}

TEST_CASE("factorize") {
  const SpfTable& t = table100k();
  auto f12 = t.factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0].prime == 2);
  CHECK(f12.factors[0].exponent == 2);
  CHECK(f12.factors[1].prime == 3);
  CHECK(f12.factors[1].exponent == 1);
  CHECK(t.factorize(1).factors.empty());
  auto f97 = t.factorize(97);
  REQUIRE(f97.factors.size() == 1);
  CHECK(f97.factors[0].prime == 97);
  CHECK_THROWS_AS(t.factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(t.factorize(t.limit() + 1), std::invalid_argument);
}

TEST_CASE("classical known values") {
  const SpfTable& t = table100k();
  CHECK(mobius(t, 6) == 1.0);
  CHECK(mobius(t, 12) == 0.0);
  CHECK(liouville(t, 12) == -1.0);
  CHECK(von_mangoldt(t, 8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt(t, 6) == 0.0);
  CHECK(is_squarefree(t, 30));
  CHECK_FALSE(is_squarefree(t, 18));
}

TEST_CASE("mobius divisor sum is the unit") {
  const SpfTable& t = table100k();
  for (uint64_t n = 1; n <= 100000; ++n) {
    double s = 0.0;
    for (uint64_t d : divisors_of(n)) s += mobius(t, d);
    CHECK(s == (n == 1 ? 1.0 : 0.0));
  }
}

TEST_CASE("liouville complete multiplicativity") {
  const SpfTable& t = table100k();
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<uint64_t> dist(1, 316);
  for (int i = 0; i < 10000; ++i) {
    uint64_t m = dist(rng), n = dist(rng);
    CHECK(liouville(t, m * n) == liouville(t, m) * liouville(t, n));
  }
}

TEST_CASE("von Mangoldt divisor sum gives log") {
  const SpfTable& t = table100k();
  for (uint64_t n = 1; n <= 100000; ++n) {
    double s = 0.0;
    for (uint64_t d : divisors_of(n)) s += von_mangoldt(t, d);
    CHECK(std::abs(s - std::log(static_cast<double>(n))) < 1e-9);
  }
}

TEST_CASE("omega_split") {
  const SpfTable& t = table100k();
  CHECK(omega_split(t, 6, 3.0) == std::pair<uint32_t, uint32_t>{1, 1});
  CHECK(omega_split(t, 1, 100.0) == std::pair<uint32_t, uint32_t>{0, 0});
  CHECK(omega_split(t, 30, 2.0) == std::pair<uint32_t, uint32_t>{0, 3});
  for (double y : {2.0, 10.0, 100.0})
    for (uint64_t n = 1; n <= 100000; ++n) {
      auto [b, a] = omega_split(t, n, y);
      CHECK(b + a == omega(t, n));
    }
}

TEST_CASE("table_of matches pointwise evaluation") {
  const SpfTable& t = table100k();
  auto mu = table_of(t, ClassicalFn::mobius, 1, 5);
  CHECK(mu == std::vector<double>{1, -1, -1, 0, -1});
  auto lam = table_of(t, ClassicalFn::liouville, 1, 4);
  CHECK(lam == std::vector<double>{1, -1, -1, 1});
  auto vm = table_of(t, ClassicalFn::von_mangoldt, 1, 4);
  CHECK(vm[0] == 0.0);
  CHECK(vm[1] == von_mangoldt(t, 2));
  CHECK(vm[2] == von_mangoldt(t, 3));
  CHECK(vm[3] == von_mangoldt(t, 4));
  auto slice = table_of(t, ClassicalFn::omega, 1000, 1100);
  for (uint64_t n = 1000; n <= 1100; ++n)
    CHECK(slice[n - 1000] == static_cast<double>(omega(t, n)));
  CHECK_THROWS_AS(table_of(t, ClassicalFn::mobius, 5, 4),
                  std::invalid_argument);
}

TEST_CASE("parallel build equals sequential build") {
  set_thread_count(4);
  SpfTable par(300000);
  set_thread_count(1);
  SpfTable seq(300000);
  for (uint64_t n = 2; n <= 300000; ++n) CHECK(par.spf(n) == seq.spf(n));
}
