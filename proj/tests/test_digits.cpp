#include <doctest.h>

#include "autoreal/digits.hpp"
#include "helpers.hpp"

using namespace autoreal;
using namespace testutil;

TEST_CASE("digit accessors agree across representations") {
  DFAO tm = load_dfao("thue_morse.json");
  MorphicRepr m = load_morphic("thue_morse_morphic.json");
  DigitFn d1 = dfao_digits(tm, 2);
  DigitFn d2 = morphic_digits(m, 2);
  DigitFn d3 = word_digits(sequence_prefix(tm, 300), 2);
  for (std::size_t n = 1; n <= 300; ++n) {
    CHECK(d1(n) == d2(n));
    CHECK(d1(n) == d3(n));
  }
}

TEST_CASE("truncation interval encloses the value") {
  DFAO tm = load_dfao("thue_morse.json");
  DigitFn d = dfao_digits(tm, 2);
  TruncationInterval t = truncation_interval(d, 2, 20);
  CHECK(t.hi - t.lo == mpq_class(1, 1 << 20));
  TruncationInterval deeper = truncation_interval(d, 2, 40);
  CHECK(deeper.lo >= t.lo);
  CHECK(deeper.hi <= t.hi);
}

TEST_CASE("periodic rational values") {
  AlphabetPtr d10 = digit_alphabet(10);
  // 0.(3) = 1/3, 0.1(6) = 1/6, 0.25 = 1/4.
  CHECK(periodic_value(Word::parse(d10, ""), Word::parse(d10, "3"), 10).value ==
        mpq_class(1, 3));
  CHECK(periodic_value(Word::parse(d10, "1"), Word::parse(d10, "6"), 10)
            .value == mpq_class(1, 6));
  CHECK(periodic_value(Word::parse(d10, "25"), Word::parse(d10, ""), 10)
            .value == mpq_class(1, 4));
  AlphabetPtr d2 = digit_alphabet(2);
  PeriodicRational x =
      periodic_value(Word::parse(d2, "0"), Word::parse(d2, "01"), 2);
  CHECK(x.value == mpq_class(1, 6));
  // As-written digits, 1-based.
  CHECK(x.digit(1) == 0);
  CHECK(x.digit(2) == 0);
  CHECK(x.digit(3) == 1);
  CHECK(x.digit(4) == 0);
  CHECK(x.digit(5) == 1);
}

TEST_CASE("digit agreement finds the first divergence") {
  AlphabetPtr d2 = digit_alphabet(2);
  PeriodicRational x =
      periodic_value(Word::parse(d2, ""), Word::parse(d2, "01"), 2);
  DigitFn stream = [](std::size_t n) -> unsigned {
    if (n <= 6) return n % 2 == 0;  // agrees with 0.(01) through 6
    return 1;
  };
  CHECK(digit_agreement(x, stream, 40).value() == 7);
  DigitFn same = [](std::size_t n) -> unsigned { return n % 2 == 0; };
  CHECK(!digit_agreement(x, same, 40).has_value());
}

TEST_CASE("distance bounds certify separation") {
  DigitFn stream = [](std::size_t) -> unsigned { return 1; };  // 0.111... = 1
  DistanceBounds db = distance_bounds(mpq_class(1, 2), stream, 2, 16);
  CHECK(db.separated);
  CHECK(db.lower > mpq_class(49, 100));
  CHECK(db.upper <= mpq_class(1, 2));
  // Value inside the enclosure: not separated.
  DistanceBounds in = distance_bounds(mpq_class(1) - mpq_class(1, 1 << 20),
                                      stream, 2, 16);
  CHECK(!in.separated);
}
