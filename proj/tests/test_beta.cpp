#include <doctest.h>

#include <cmath>
#include <random>

#include "autoreal/beta.hpp"
#include "helpers.hpp"

using namespace autoreal;
using namespace testutil;

namespace {

// Random golden-field instance meeting the field-separation hypotheses:
// alpha = 0.U(V)^inf with admissible written digits, xi's greedy digits
// agree below j, differ at j > r+s, then terminate (zero tail).
struct GoldenInstance {
  Word U, V;
  DigitFn stream;
  std::size_t j;
};

GoldenInstance random_golden_instance(std::mt19937& rng) {
  AlphabetPtr d2 = digit_alphabet(2);
  for (;;) {
    std::size_t r = rng() % 4, s = 1 + rng() % 3;
    std::vector<uint32_t> u, v;
    for (std::size_t i = 0; i < r; ++i) u.push_back(rng() & 1);
    for (std::size_t i = 0; i < s; ++i) v.push_back(rng() & 1);
    // Written digits must avoid consecutive ones (greedy-admissible in
    // the golden base); checking U V V covers the periodic wrap.
    std::vector<uint32_t> uvv = u;
    uvv.insert(uvv.end(), v.begin(), v.end());
    uvv.insert(uvv.end(), v.begin(), v.end());
    bool bad = false;
    for (std::size_t i = 0; i + 1 < uvv.size(); ++i)
      if (uvv[i] && uvv[i + 1]) bad = true;
    if (bad) continue;

    auto digit = [&](std::size_t n) -> unsigned {
      return n <= r ? u[n - 1] : v[(n - r - 1) % s];
    };
    std::size_t j = r + s + 1 + rng() % 6;
    unsigned dj = digit(j);
    unsigned ej = 1 - dj;
    if (ej == 1) {
      if (digit(j - 1) == 1) continue;
      // Exclude the improper tail (10)^inf after j, whose value attains
      // the supremum beta^-j.
      bool alternating = true;
      for (std::size_t t = 1; t <= 2 * s + 2; ++t)
        if (digit(j + t) != (t % 2 ? 1u : 0u)) alternating = false;
      if (alternating) continue;
    }
    std::vector<unsigned> prefix;
    for (std::size_t n = 1; n < j; ++n) prefix.push_back(digit(n));
    DigitFn stream = [prefix, j, ej](std::size_t n) -> unsigned {
      if (n < j) return prefix[n - 1];
      if (n == j) return ej;
      return 0;
    };
    return {Word(d2, u), Word(d2, v), stream, j};
  }
}

}  // namespace

TEST_CASE("number field root enclosure") {
  FieldPtr f = golden_field();
  auto [lo, hi] = f->beta_enclosure(64);
  CHECK(hi - lo <= mpq_class(1, mpz_class(1) << 64));
  CHECK(f->eval_poly(lo) * f->eval_poly(hi) <= 0);
  CHECK(f->beta_floor() == 1);
  CHECK(lo > mpq_class(8, 5));
  CHECK(hi < mpq_class(13, 8));
  CHECK_THROWS(make_field({mpz_class(-1), mpz_class(1)}));  // degree < 2
  CHECK_THROWS(make_field({mpz_class(-1), mpz_class(0), mpz_class(2)}));
}

TEST_CASE("field arithmetic and inverse") {
  FieldPtr f = golden_field();
  FieldElement b = FieldElement::beta(f);
  FieldElement one = FieldElement::from_rational(f, 1);
  CHECK(b * b == b + one);  // defining relation
  CHECK((b - b).is_zero());
  CHECK((b * b.inverse()) == one);
  CHECK(b.sign() == 1);
  CHECK((-b).sign() == -1);
  CHECK((b - one).sign() == 1);
  // 1/beta = beta - 1 in the golden field.
  CHECK(b.inverse() == b - one);
  CHECK_THROWS((b - b).inverse());
}

TEST_CASE("pisot and salem classification") {
  CHECK(classify_pisot_salem({mpz_class(-1), mpz_class(-1), mpz_class(1)})
            .classification == BetaClass::Pisot);
  CHECK(classify_pisot_salem({mpz_class(1), mpz_class(-3), mpz_class(1)})
            .classification == BetaClass::Pisot);
  CHECK(classify_pisot_salem({mpz_class(-2), mpz_class(0), mpz_class(1)})
            .classification == BetaClass::Neither);
  // Self-reciprocal quartic: one conjugate pair stays on the circle.
  CHECK(classify_pisot_salem({mpz_class(1), mpz_class(-1), mpz_class(-1),
                              mpz_class(-1), mpz_class(1)})
            .classification == BetaClass::Salem);
}

TEST_CASE("golden-base identities") {
  FieldPtr f = golden_field();
  AlphabetPtr d2 = digit_alphabet(2);
  // 1/beta + 1/beta^2 = 1.
  CHECK(word_value(Word::parse(d2, "11"), f) ==
        FieldElement::from_rational(f, 1));
  // 0.(1) = 1/(beta - 1) = beta.
  CHECK(beta_periodic_value(Word::parse(d2, ""), Word::parse(d2, "1"), f) ==
        FieldElement::beta(f));
}

TEST_CASE("greedy expansion matches a floating-point oracle") {
  FieldPtr f = golden_field();
  long double beta = (1.0L + std::sqrt(5.0L)) / 2.0L;
  std::mt19937 rng(21);
  for (int it = 0; it < 50; ++it) {
    long num = rng() % 997;
    mpq_class x(num, 997);
    x.canonicalize();
    Word w = greedy_beta_expansion(FieldElement::from_rational(f, x), 8);
    long double y = mpq_class(x).get_d();
    for (std::size_t i = 0; i < 8; ++i) {
      long double scaled = beta * y;
      unsigned d = static_cast<unsigned>(std::floor(scaled));
      // Skip oracle digits too close to the floor boundary to trust.
      long double frac = scaled - std::floor(scaled);
      if (frac < 1e-9 || frac > 1.0L - 1e-9) return;
      CHECK(std::to_string(d) == w.token(i));
      y = scaled - d;
    }
  }
}

TEST_CASE("greedy tails stay below the truncation scale") {
  FieldPtr f = golden_field();
  std::mt19937 rng(22);
  const std::size_t N = 10;
  for (int it = 0; it < 100; ++it) {
    mpq_class x(static_cast<long>(rng() % 1009), 1009);
    x.canonicalize();
    FieldElement xe = FieldElement::from_rational(f, x);
    Word w = greedy_beta_expansion(xe, N);
    for (std::size_t r = 0; r <= N; ++r) {
      FieldElement tail = xe - word_value(w.prefix(r), f);
      CHECK(tail.sign() >= 0);
      CHECK((tail * beta_pow(f, r) - FieldElement::from_rational(f, 1))
                .sign() < 0);
    }
  }
}

TEST_CASE("periodic beta values round trip through greedy expansion") {
  FieldPtr f = golden_field();
  AlphabetPtr d2 = digit_alphabet(2);
  // 0.(100) is its own greedy expansion; greedy recovers it.
  FieldElement v =
      beta_periodic_value(Word::parse(d2, ""), Word::parse(d2, "100"), f);
  Word w = greedy_beta_expansion(v, 9);
  CHECK(w.str() == "100100100");
}

TEST_CASE("field separation lemma on random golden instances") {
  FieldPtr f = golden_field();
  std::mt19937 rng(23);
  for (int it = 0; it < 200; ++it) {
    GoldenInstance inst = random_golden_instance(rng);
    BetaSeparation res =
        lemma_dist_prime_check(inst.U, inst.V, f, inst.stream, inst.j);
    CHECK(res.holds);
    CHECK(res.bound_lo <= res.bound_hi);
  }
}

TEST_CASE("field ladder on thue-morse digits") {
  FieldPtr f = golden_field();
  BetaLadderReport rep =
      beta_ladder(load_morphic("thue_morse_morphic.json"), f, 2);
  REQUIRE(!rep.records.empty());
  CHECK(rep.d == 2);
  for (const auto& r : rep.records) {
    CHECK(r.height >= 1);
    CHECK(r.err_lo <= r.err_hi);
    CHECK(!r.annihilator.empty());
  }
}
