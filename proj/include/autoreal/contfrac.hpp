#ifndef AUTOREAL_CONTFRAC_HPP
#define AUTOREAL_CONTFRAC_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "autoreal/cobham.hpp"

namespace autoreal {

/// [a0; q1, q2, ...] with all partial quotients >= 1.
struct CFWord {
  mpz_class a0;
  std::vector<mpz_class> quotients;

  void validate() const;
};

struct Convergent {
  mpz_class p, q;
};

// Convergents p_i/q_i for i = 0..quotients.size(); p_0/q_0 = a0/1.
std::vector<Convergent> convergents(const CFWord& cf);

mpq_class convergent_value(const Convergent& c);

// Finite continued fraction of x (canonical: last quotient >= 2 unless
// the expansion has a single term).
CFWord cf_of_rational(const mpq_class& x);

mpq_class cf_value(const CFWord& cf);

// Longest continued-fraction prefix shared by every real in [lo, hi],
// computed by running the quotient extraction on the interval itself;
// a quotient is emitted only while both endpoints agree on it and the
// interval stays clear of the integer boundary.
CFWord certified_cf_of_interval(const mpq_class& lo, const mpq_class& hi,
                                std::size_t max_quotients = 1u << 20);

/// Root of c2 X^2 + c1 X + c0 isolated by a rational interval.
struct QuadraticNumber {
  mpz_class c2, c1, c0;
  mpq_class lo, hi;  // sign(P(lo)) != sign(P(hi)), root inside

  mpz_class height() const;  // max |coefficient|
  mpq_class eval(const mpq_class& x) const;
  // Shrinks the enclosure until hi - lo <= 2^-bits.
  void refine(unsigned long bits);
};

// X in (0,1) with X = [0; U, U, U, ...]: with p_i/q_i the convergents
// of [0; U] (s = |U| quotients), returns
//   P(X) = q_{s-1} X^2 + (q_s - p_{s-1}) X - p_s.
QuadraticNumber periodic_cf_quadratic(const std::vector<mpz_class>& U);

// Continued fraction of the root, certified from its refined enclosure.
CFWord cf_of_quadratic(QuadraticNumber& x, std::size_t n_quotients);

struct QuadraticLadderRecord {
  std::size_t n = 0;
  std::vector<mpz_class> period;  // U_n as partial quotients
  std::size_t s_n = 0, t_n = 0;
  QuadraticNumber alpha;
  mpz_class height;      // H(alpha_n) proxy: max |P_n| coefficient
  mpz_class q_s, q_st;   // continuants q_{s_n}, q_{s_n+t_n} of xi
  bool height_ok = false;  // H(alpha_n) < q_{s_n}
  bool approx_ok = false;  // |xi - alpha_n| < 1/q_{s_n+t_n}^2
  mpq_class exponent_ratio;  // 2 log2(q_{s_n+t_n}) / log2(q_{s_n}), observed
  bool degenerate = false;   // same quadratic (up to content) as previous n
};

// xi = [0; b_1, b_2, ...] with b_i the output letters of M (positive
// integers); alpha_n = [0; overline(phi(sigma^n(a U)))] from the
// first-letter recurrence a U a of the internal fixed point.
std::vector<QuadraticLadderRecord> quadratic_ladder(const MorphicRepr& m,
                                                    std::size_t n_max);

struct SeparationResult {
  std::size_t n = 0;    // agreement length in partial quotients
  mpq_class bound;      // 1/((Mq+2)^3 q_n^2)
  mpq_class distance;   // exact |xi - alpha| of the supplied values
  bool holds = false;   // distance >= bound
};

// Both continued fractions are taken as exact finite values; quotients
// must not exceed Mq and a first disagreement must exist.
SeparationResult lemma_dist2_check(const CFWord& alpha, const CFWord& xi,
                                   const mpz_class& Mq);

}  // namespace autoreal

#endif
