#include <doctest.h>

#include <random>

#include "autoreal/rational.hpp"

using namespace autoreal;

TEST_CASE("integer powers") {
  CHECK(pow_z(2ul, 10ul) == 1024);
  CHECK(pow_z(mpz_class(10), 0ul) == 1);
  CHECK(pow_q(mpq_class(2), -3) == mpq_class(1, 8));
  CHECK(pow_q(mpq_class(3, 2), 2) == mpq_class(9, 4));
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-7") == mpq_class(-7));
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK(rational_str(mpq_class(3, 2)) == "3/2");
  CHECK(rational_str(mpq_class(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("power product comparison agrees with direct computation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned long> base(1, 50), ex(0, 12);
  for (int it = 0; it < 500; ++it) {
    std::vector<PowTerm> lhs, rhs;
    mpz_class l = 1, r = 1;
    for (int t = 0; t < 3; ++t) {
      PowTerm a{mpz_class(base(rng)), ex(rng)};
      PowTerm b{mpz_class(base(rng)), ex(rng)};
      l *= pow_z(a.base, a.exp);
      r *= pow_z(b.base, b.exp);
      lhs.push_back(a);
      rhs.push_back(b);
    }
    int want = l < r ? -1 : l > r ? 1 : 0;
    CHECK(cmp_pow_products(lhs, rhs) == want);
  }
}

TEST_CASE("power product comparison on huge near-ties") {
  // b^(ac) vs (b^a)^c with a unit offset: forces the exact fallback.
  std::vector<PowTerm> lhs{{mpz_class(2), 100000ul}};
  std::vector<PowTerm> rhs{{pow_z(2ul, 1000ul), 100ul}};
  CHECK(cmp_pow_products(lhs, rhs) == 0);
  rhs.push_back({mpz_class(2), 1ul});
  CHECK(cmp_pow_products(lhs, rhs) == -1);
}

TEST_CASE("fractional power comparisons match exact cross powers") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(1, 40), den(1, 40);
  std::uniform_int_distribution<unsigned long> a(1, 9), c(1, 4);
  std::uniform_int_distribution<long> qd(2, 12);
  for (int it = 0; it < 500; ++it) {
    mpq_class x(num(rng), den(rng));
    mpz_class q(qd(rng));
    mpq_class tau(a(rng), c(rng));
    unsigned long an = mpz_class(tau.get_num()).get_ui();
    unsigned long cn = mpz_class(tau.get_den()).get_ui();
    // x < q^(-a/c)  <=>  x^c q^a < 1.
    mpz_class l = pow_z(mpz_class(x.get_num()), cn) * pow_z(q, an);
    mpz_class r = pow_z(mpz_class(x.get_den()), cn);
    CHECK(lt_neg_pow(x, q, tau) == (l < r));
    CHECK(gt_neg_pow(x, q, tau) == (l > r));
  }
}

TEST_CASE("exponent grid search finds the boundary") {
  // x = 1/32 against q = 2: x < 2^-t iff t < 5 (strict at t = 5).
  mpq_class x(1, 32);
  mpz_class q(2);
  mpq_class got = max_exponent_on_grid(x, q, mpq_class(1, 4), mpq_class(1, 4),
                                       mpq_class(20));
  CHECK(got == mpq_class(19, 4));  // largest grid t with 1/32 < 2^-t
  // Failure already at the low end returns lo - step.
  CHECK(max_exponent_on_grid(mpq_class(2), q, mpq_class(1), mpq_class(1),
                             mpq_class(4)) == mpq_class(0));
}
