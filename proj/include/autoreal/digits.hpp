#ifndef AUTOREAL_DIGITS_HPP
#define AUTOREAL_DIGITS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>

#include "autoreal/automaton.hpp"
#include "autoreal/cobham.hpp"
#include "autoreal/words.hpp"

namespace autoreal {

// Digit accessor for 0.a_1 a_2 a_3 ...; callers fix the indexing offset
// when the surrounding theorem counts from 0.
using DigitFn = std::function<unsigned(std::size_t)>;

// Digits a_n := sequence term n-1 (term 0 becomes the first fractional
// digit), values checked against the base.
DigitFn dfao_digits(const DFAO& a, unsigned b);
DigitFn morphic_digits(const MorphicRepr& m, unsigned b);
DigitFn word_digits(const Word& w, unsigned b);

// Numeric digit value of letter i of a digit word; validated < b.
unsigned digit_value(const Word& w, std::size_t i, unsigned b);

/// Exact rational enclosure of a real from its first `depth` digits.
struct TruncationInterval {
  mpq_class lo, hi;  // hi - lo = b^-depth
  std::size_t depth = 0;
  unsigned base = 2;
};

TruncationInterval truncation_interval(const DigitFn& digits, unsigned b,
                                       std::size_t depth);

/// Rational 0.U VVV... in base b, with its as-written digit string.
struct PeriodicRational {
  Word U, V;
  unsigned b = 10;
  mpq_class value;  // reduced, in [0, 1]
  std::size_t r = 0, s = 0;

  // As-written digit a_n (1-based), without canonicalization.
  unsigned digit(std::size_t n) const;
};

PeriodicRational periodic_value(const Word& U, const Word& V, unsigned b);

// Smallest 1-based index j <= limit where the written expansion of x
// and the stream differ; nullopt when they agree through `limit`.
std::optional<std::size_t> digit_agreement(const PeriodicRational& x,
                                           const DigitFn& stream,
                                           std::size_t limit);

// Certified distance bounds between the real enclosed by its digit
// stream at `depth` and the rational x: any continuation of the stream
// lies in [lo, hi]; returns [min, max] distance over that interval.
struct DistanceBounds {
  mpq_class lower, upper;
  bool separated = false;  // x strictly outside the enclosure
};

DistanceBounds distance_bounds(const mpq_class& x, const DigitFn& stream,
                               unsigned b, std::size_t depth);

}  // namespace autoreal

#endif
