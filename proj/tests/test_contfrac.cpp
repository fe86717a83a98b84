#include <doctest.h>

#include <random>

#include "autoreal/contfrac.hpp"
#include "helpers.hpp"

using namespace autoreal;
using namespace testutil;

TEST_CASE("continued fraction of a rational round trips") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
  for (int it = 0; it < 500; ++it) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    CFWord cf = cf_of_rational(x);
    cf.validate();
    if (!cf.quotients.empty()) CHECK(cf.quotients.back() >= 2);
    CHECK(cf_value(cf) == x);
  }
}

TEST_CASE("convergents satisfy the determinant identity") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> q(1, 9);
  for (int it = 0; it < 200; ++it) {
    CFWord cf;
    cf.a0 = q(rng);
    for (int i = 0; i < 8; ++i) cf.quotients.push_back(q(rng));
    std::vector<Convergent> cs = convergents(cf);
    REQUIRE(cs.size() == 9);
    CHECK(cs[0].p == cf.a0);
    CHECK(cs[0].q == 1);
    for (std::size_t i = 1; i < cs.size(); ++i) {
      mpz_class det = cs[i].p * cs[i - 1].q - cs[i - 1].p * cs[i].q;
      CHECK(abs(det) == 1);
      CHECK(cs[i].q >= cs[i - 1].q);
    }
    CHECK(convergent_value(cs.back()) == cf_value(cf));
  }
}

TEST_CASE("certified interval continued fraction") {
  // The full unit interval pins only a0 = 0.
  CFWord unit = certified_cf_of_interval(0, 1);
  CHECK(unit.a0 == 0);
  CHECK(unit.quotients.empty());

  // A tight interval around x reproduces a prefix of x's expansion,
  // and every y in the interval shares that prefix's convergent chain.
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> num(1, 999);
  for (int it = 0; it < 200; ++it) {
    mpq_class x(num(rng), 1000);
    x.canonicalize();
    mpq_class w(1, 1000000);
    CFWord got = certified_cf_of_interval(x - w, x + w);
    CFWord full = cf_of_rational(x);
    CHECK(got.a0 == full.a0);
    REQUIRE(got.quotients.size() <= full.quotients.size());
    for (std::size_t i = 0; i < got.quotients.size(); ++i)
      CHECK(got.quotients[i] == full.quotients[i]);
  }
}

TEST_CASE("golden quadratic from the period (1)") {
  QuadraticNumber x = periodic_cf_quadratic({mpz_class(1)});
  CHECK(x.c2 == 1);
  CHECK(x.c1 == 1);
  CHECK(x.c0 == -1);
  // P changes sign across the enclosure and the root re-expands to 1s.
  CHECK(x.eval(x.lo) * x.eval(x.hi) <= 0);
  CFWord cf = cf_of_quadratic(x, 20);
  CHECK(cf.a0 == 0);
  REQUIRE(cf.quotients.size() == 20);
  for (const mpz_class& a : cf.quotients) CHECK(a == 1);
}

TEST_CASE("periodic quadratics vanish at their root enclosure") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> q(1, 6);
  for (int it = 0; it < 50; ++it) {
    std::vector<mpz_class> U;
    for (int i = 0; i < 1 + int(rng() % 3); ++i) U.push_back(q(rng));
    QuadraticNumber x = periodic_cf_quadratic(U);
    x.refine(64);
    CHECK(x.eval(x.lo) * x.eval(x.hi) <= 0);
    CHECK(x.hi - x.lo <= mpq_class(1, mpz_class(1) << 64));
    CHECK(x.height() >= 1);
    // Re-expansion repeats the period.
    CFWord cf = cf_of_quadratic(x, 3 * U.size());
    for (std::size_t i = 0; i < cf.quotients.size(); ++i)
      CHECK(cf.quotients[i] == U[i % U.size()]);
  }
}

TEST_CASE("separation bound for bounded-quotient continued fractions") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> mq(1, 5);
  for (int it = 0; it < 200; ++it) {
    long M = mq(rng);
    std::uniform_int_distribution<long> q(1, M);
    CFWord alpha, xi;
    alpha.a0 = 0;
    xi.a0 = 0;
    std::size_t common = rng() % 6;
    for (std::size_t i = 0; i < common; ++i) {
      long a = q(rng);
      alpha.quotients.push_back(a);
      xi.quotients.push_back(a);
    }
    if (M == 1) {
      // All-ones expansions of distinct lengths (Fibonacci ratios).
      alpha.quotients.push_back(1);
      xi.quotients.push_back(1);
      xi.quotients.push_back(1);
    } else {
      long a = 1 + rng() % M, b = 1 + rng() % M;
      if (a == b) b = a == M ? a - 1 : a + 1;
      alpha.quotients.push_back(a);
      xi.quotients.push_back(b);
      for (int t = 0; t < int(rng() % 3); ++t) {
        alpha.quotients.push_back(q(rng));
        xi.quotients.push_back(q(rng));
      }
      // Canonical tails keep the two values distinct.
      alpha.quotients.push_back(2 > M ? M : 2);
      xi.quotients.push_back(2 > M ? M : 2);
    }
    SeparationResult res = lemma_dist2_check(alpha, xi, mpz_class(M));
    CHECK(res.holds);
    CHECK(res.distance >= res.bound);
  }
}

TEST_CASE("quadratic ladder on the bundled quotient sequence") {
  std::vector<QuadraticLadderRecord> recs =
      quadratic_ladder(load_morphic("quotient_morphic.json"), 3);
  REQUIRE(!recs.empty());
  for (const auto& r : recs) {
    CHECK(r.height >= 1);
    CHECK(r.q_s <= r.q_st);
    CHECK(r.alpha.eval(r.alpha.lo) * r.alpha.eval(r.alpha.hi) <= 0);
  }
}
