#include "autoreal/digits.hpp"

#include <stdexcept>

#include "autoreal/rational.hpp"

namespace autoreal {

namespace {

unsigned checked_digit(unsigned v, unsigned b) {
  if (v >= b) throw std::domain_error("digit exceeds base");
  return v;
}

unsigned letter_digit(const AlphabetPtr& alpha, uint32_t letter, unsigned b) {
  const std::string& tok = alpha->letter(letter);
  std::size_t pos = 0;
  unsigned long v;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw std::domain_error("non-numeric output letter '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::domain_error("non-numeric output letter '" + tok + "'");
  return checked_digit(static_cast<unsigned>(v), b);
}

}  // namespace

DigitFn dfao_digits(const DFAO& a, unsigned b) {
  if (b < 2) throw std::invalid_argument("dfao_digits: base < 2");
  a.validate();
  auto shared = std::make_shared<DFAO>(a);
  return [shared, b](std::size_t n) {
    if (n == 0) throw std::invalid_argument("digits are 1-based");
    mpz_class idx(static_cast<unsigned long>(n - 1));
    return letter_digit(shared->output_alphabet, eval_index(*shared, idx), b);
  };
}

DigitFn morphic_digits(const MorphicRepr& m, unsigned b) {
  if (b < 2) throw std::invalid_argument("morphic_digits: base < 2");
  m.validate();
  // Lazily extended materialized prefix; doubling keeps amortized cost
  // linear for the sequential access pattern of truncation intervals.
  struct Cache {
    MorphicRepr m;
    Word prefix;
  };
  auto cache = std::make_shared<Cache>(Cache{m, m.output_prefix(64)});
  return [cache, b](std::size_t n) {
    if (n == 0) throw std::invalid_argument("digits are 1-based");
    if (n > cache->prefix.size()) {
      std::size_t want = cache->prefix.size();
      while (want < n) want *= 2;
      cache->prefix = cache->m.output_prefix(want);
    }
    return letter_digit(cache->prefix.alphabet(), cache->prefix[n - 1], b);
  };
}

DigitFn word_digits(const Word& w, unsigned b) {
  if (b < 2) throw std::invalid_argument("word_digits: base < 2");
  auto shared = std::make_shared<Word>(w);
  return [shared, b](std::size_t n) {
    if (n == 0 || n > shared->size())
      throw std::out_of_range("word_digits: index outside word");
    return letter_digit(shared->alphabet(), (*shared)[n - 1], b);
  };
}

unsigned digit_value(const Word& w, std::size_t i, unsigned b) {
  return letter_digit(w.alphabet(), w[i], b);
}

TruncationInterval truncation_interval(const DigitFn& digits, unsigned b,
                                       std::size_t depth) {
  if (b < 2) throw std::invalid_argument("truncation_interval: base < 2");
  mpz_class num = 0;
  for (std::size_t n = 1; n <= depth; ++n) {
    num *= b;
    num += checked_digit(digits(n), b);
  }
  mpz_class scale = pow_z(static_cast<unsigned long>(b),
                          static_cast<unsigned long>(depth));
  TruncationInterval t;
  t.depth = depth;
  t.base = b;
  t.lo = mpq_class(num, scale);
  t.lo.canonicalize();
  t.hi = mpq_class(num + 1, scale);
  t.hi.canonicalize();
  return t;
}

unsigned PeriodicRational::digit(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("digits are 1-based");
  if (n <= r) return digit_value(U, n - 1, b);
  if (s == 0) return 0;  // terminating expansion as written
  return digit_value(V, (n - r - 1) % s, b);
}

PeriodicRational periodic_value(const Word& U, const Word& V, unsigned b) {
  if (b < 2) throw std::invalid_argument("periodic_value: base < 2");
  PeriodicRational x{U, V, b, mpq_class(), U.size(), V.size()};
  mpz_class nu = 0;
  for (std::size_t i = 0; i < U.size(); ++i) {
    nu *= b;
    nu += digit_value(U, i, b);
  }
  mpz_class nuv = nu;
  for (std::size_t i = 0; i < V.size(); ++i) {
    nuv *= b;
    nuv += digit_value(V, i, b);
  }
  mpz_class br = pow_z(static_cast<unsigned long>(b),
                       static_cast<unsigned long>(x.r));
  if (x.s == 0) {
    x.value = mpq_class(nu, br);
  } else {
    // 0.U(V)^inf = (N(UV) - N(U)) / (b^r (b^s - 1))
    mpz_class bs = pow_z(static_cast<unsigned long>(b),
                         static_cast<unsigned long>(x.s));
    x.value = mpq_class(nuv - nu, br * (bs - 1));
  }
  x.value.canonicalize();
  return x;
}

std::optional<std::size_t> digit_agreement(const PeriodicRational& x,
                                           const DigitFn& stream,
                                           std::size_t limit) {
  for (std::size_t n = 1; n <= limit; ++n)
    if (x.digit(n) != checked_digit(stream(n), x.b)) return n;
  return std::nullopt;
}

DistanceBounds distance_bounds(const mpq_class& x, const DigitFn& stream,
                               unsigned b, std::size_t depth) {
  TruncationInterval t = truncation_interval(stream, b, depth);
  DistanceBounds d;
  if (x < t.lo) {
    d.lower = t.lo - x;
    d.upper = t.hi - x;
    d.separated = true;
  } else if (x > t.hi) {
    d.lower = x - t.hi;
    d.upper = x - t.lo;
    d.separated = true;
  } else {
    d.lower = 0;
    mpq_class a = x - t.lo, c = t.hi - x;
    d.upper = a > c ? a : c;
    d.separated = false;
  }
  return d;
}

}  // namespace autoreal
