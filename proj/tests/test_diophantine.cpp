#include <doctest.h>

#include <array>
#include <random>

#include "autoreal/diophantine.hpp"
#include "helpers.hpp"

using namespace autoreal;
using namespace testutil;

TEST_CASE("measure bound values") {
  CHECK(measure_bound(2, 2, 2) == 20);
  CHECK(measure_bound(3, 2, 3) == 54);
  CHECK(measure_bound(1, 2, 1) == 6);
  CHECK_THROWS(measure_bound(0, 2, 1));
  CHECK_THROWS(measure_bound(1, 1, 1));
  CHECK_THROWS(measure_bound(1, 2, 0));
}

namespace {

// Random instance meeting the separation-lemma hypotheses: the stream
// agrees with the written digits of 0.U(V)^inf below j, differs at j,
// and then continues with a constant extremal tail.
struct Instance {
  PeriodicRational x;
  DigitFn stream;
  std::size_t j;
};

Instance random_instance(std::mt19937& rng, unsigned tail_digit_kind) {
  std::uniform_int_distribution<int> bpick(0, 2);
  unsigned b = std::array<unsigned, 3>{2, 3, 10}[bpick(rng)];
  AlphabetPtr ab = digit_alphabet(b);
  std::uniform_int_distribution<std::size_t> ulen(0, 4), vlen(1, 5);
  std::uniform_int_distribution<unsigned> dig(0, b - 1);
  Word U(ab), V(ab);
  std::size_t r = ulen(rng);
  for (std::size_t i = 0; i < r; ++i) U.push_back(dig(rng));
  // V must use at least two digit values so the written expansion is
  // neither terminating nor improper beyond the divergence point.
  for (;;) {
    Word cand(ab);
    std::size_t s = vlen(rng);
    for (std::size_t i = 0; i < s; ++i) cand.push_back(dig(rng));
    bool all0 = true, allb = true;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand[i] != 0) all0 = false;
      if (cand[i] != b - 1) allb = false;
    }
    if (!all0 && !allb) {
      V = cand;
      break;
    }
  }
  PeriodicRational x = periodic_value(U, V, b);
  std::uniform_int_distribution<std::size_t> jpick(r + 1, r + V.size() + 8);
  std::size_t j = jpick(rng);
  unsigned dj = x.digit(j);
  unsigned ej = dig(rng);
  while (ej == dj) ej = dig(rng);
  unsigned tail = tail_digit_kind == 0 ? 0 : b - 1;
  PeriodicRational xc = x;
  DigitFn stream = [xc, j, ej, tail](std::size_t n) -> unsigned {
    if (n < j) return xc.digit(n);
    if (n == j) return ej;
    return tail;
  };
  return {x, stream, j};
}

}  // namespace

TEST_CASE("separation lemma holds under both extremal continuations") {
  std::mt19937 rng(77);
  for (int it = 0; it < 1000; ++it) {
    Instance inst = random_instance(rng, it & 1);
    LemmaDistResult res = lemma_dist_check(inst.x, inst.stream, inst.j);
    CHECK(res.holds);
    CHECK(res.bound ==
          mpq_class(1, pow_z(static_cast<unsigned long>(inst.x.b),
                             inst.j + inst.x.s)));
  }
}

TEST_CASE("separation lemma rejects malformed instances") {
  AlphabetPtr d2 = digit_alphabet(2);
  PeriodicRational x =
      periodic_value(Word::parse(d2, "10"), Word::parse(d2, "01"), 2);
  DigitFn agreeing = [x](std::size_t n) { return x.digit(n); };
  CHECK_THROWS(lemma_dist_check(x, agreeing, 1));  // j <= r
  CHECK_THROWS(lemma_dist_check(x, agreeing, 5));  // no divergence at j
}

TEST_CASE("approximant ladder for baum-sweet") {
  MorphicRepr m = to_morphic(load_dfao("baum_sweet.json"));
  LadderReport rep = build_ladder(m, 2, 4, mpq_class(1, 4));
  REQUIRE(!rep.records.empty());
  CHECK(rep.k == 2);
  CHECK(rep.b == 2);
  CHECK(rep.d >= 2);
  CHECK(rep.m >= 2);
  for (const auto& rec : rep.records) {
    CHECK(rec.checks.count("j"));
    CHECK(rec.checks.count("nsba"));
    CHECK(rec.checks.at("j").holds);
    CHECK(rec.checks.at("nsba").holds);
    CHECK(rec.s_n >= 1);
    // Exact scaling r_n = k^n r_0 etc.
    CHECK(rec.r_n == rep.records[0].r_n * pow_z(2ul, rec.n));
    CHECK(rec.s_n == rep.records[0].s_n * pow_z(2ul, rec.n));
  }
  CHECK(rep.thresholds.count("cptv"));
  CHECK(rep.thresholds.count("mercikp"));
  CHECK(rep.growth_ratios.size() + 1 == rep.records.size());
}

TEST_CASE("overlap ladder on the ternary fixture") {
  LadderReport rep = overlap_ladder(load_morphic("ternary_overlap.json"), 3, 4);
  REQUIRE(!rep.records.empty());
  CHECK(rep.epsilon == mpq_class(1, 3));  // 1/|U| for the bundled overlap
  for (const auto& rec : rep.records) {
    CHECK(rec.checks.at("big").holds);
    CHECK(rec.checks.at("nsba3").holds);
  }
  CHECK(rep.thresholds.count("sm"));
  CHECK(rep.distinctness_ok);
}

TEST_CASE("thue-morse approximant check, small instance") {
  TmmResult res = tmm_verify(2, 2);
  CHECK(res.j == 5 * 4 + 2);
  CHECK(res.agreement_ok);
  CHECK(res.lower_ok);
  CHECK(res.upper_ok);
  CHECK(res.upper_sharp_ok);  // the sharper display exponent, base 2 only
  CHECK(!tmm_verify(3, 2).upper_sharp_ok);
  CHECK_THROWS(tmm_verify(2, 1));  // n >= 2 required
}

TEST_CASE("empirical exponent on a shallow thue-morse truncation") {
  DFAO tm = load_dfao("thue_morse.json");
  ExponentReport rep = empirical_exponent(dfao_digits(tm, 2), 2, 256);
  REQUIRE(!rep.records.empty());
  CHECK(rep.max_exponent >= 2);
  CHECK(rep.max_exponent <= 5);
  for (const auto& rec : rep.records)
    if (rec.certified) CHECK(rec.exponent >= 2);
  // Rational targets are refused.
  DigitFn periodic = [](std::size_t n) -> unsigned { return n % 2; };
  CHECK_THROWS_AS(empirical_exponent(periodic, 2, 256), std::domain_error);
}

TEST_CASE("ladder growth conditions report") {
  std::vector<HeightErrorRecord> recs;
  mpq_class H = 4;
  for (int i = 0; i < 5; ++i) {
    mpq_class err = 1 / (H * H * H);  // err = H^-3 < H^-(2+1/2)
    recs.push_back({H, err, err});    // H^-3 > H^-(7/2) strictly
    H = H * H;  // H_{n+1} = H_n^2 < H_n^s for s = 3
  }
  ConditionsParams params{mpq_class(1, 2), mpq_class(3), mpq_class(5, 2),
                          mpq_class(7, 2)};
  ConditionsReport baker =
      ladder_conditions_report(recs, ConditionsMode::Baker, params);
  CHECK(baker.all_hold);
  ConditionsReport l53 =
      ladder_conditions_report(recs, ConditionsMode::Lemma53, params);
  CHECK(l53.all_hold);
  CHECK(!baker.conclusion.empty());
}
