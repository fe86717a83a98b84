#ifndef AUTOREAL_DIOPHANTINE_HPP
#define AUTOREAL_DIOPHANTINE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "autoreal/cobham.hpp"
#include "autoreal/digits.hpp"
#include "autoreal/words.hpp"

namespace autoreal {

// M = d k (k^m + 1); the irrationality-measure bound for a k-automatic
// real with internal alphabet size d and kernel cardinality m.
mpz_class measure_bound(unsigned long d, unsigned long k, unsigned long m);

struct LemmaDistResult {
  mpq_class bound;  // b^-(j+s)
  bool holds = false;
  std::size_t depth_used = 0;
};

// |xi - p/q| > b^-(j+s) for x = 0.U(V)^inf = p/q when the stream agrees
// with x's written digits below j and differs at j > r = |U|. Certified
// against every continuation of the stream by interval separation.
LemmaDistResult lemma_dist_check(const PeriodicRational& x,
                                 const DigitFn& stream, std::size_t j,
                                 std::size_t max_depth = 1u << 16);

struct InequalityCheck {
  bool holds = false;
  // Normalized margin: comparisons lhs < rhs^tau are certified as
  // lhs^c * rhs^-a-style integer cross-products; margin = 1 - ratio for
  // upper bounds, ratio - 1 for lower bounds (positive iff holds).
  mpq_class margin;
};

struct ApproximantRecord {
  std::size_t n = 0;
  Word U_n, V_n;
  std::size_t r_n = 0, s_n = 0, t_n = 0;
  PeriodicRational value;
  mpz_class q_unreduced;  // b^{r_n}(b^{s_n}-1), or b^{s_n}-1 (overlap form)
  std::map<std::string, InequalityCheck> checks;
};

struct LadderReport {
  std::vector<ApproximantRecord> records;
  // First index from which the inequality holds through the whole
  // scanned range; absent when the last record violates it.
  std::map<std::string, std::size_t> thresholds;
  mpq_class epsilon;
  std::vector<mpq_class> growth_ratios;  // (r+s) length ratios per step
  bool periodicity_warning = false;
  bool distinctness_ok = true;  // overlap ladder: values distinct in m-windows
  std::size_t d = 0, m = 0;
  unsigned k = 2, b = 2;
};

// Theorem-style ladder from the second-occurrence prefix U a V a:
// U_n = phi(sigma^n(U)), V_n = phi(sigma^n(aV)); certifies per record
//   (j)       |xi - p_n/q_n| < 1/b^{r_n+s_n+t_n}
//   (nsba)    |xi - p_n/q_n| < 1/q_n^{1+1/d}
//   (cptv)    q_{n+1} < q_n^{k+eps}
//   (mercikp) |xi - p_n/q_n| > 1/q_n^{k^m+1+eps}
LadderReport build_ladder(const MorphicRepr& m, unsigned b, std::size_t n_max,
                          const mpq_class& epsilon);

// Overlap ladder from an internal prefix U U a: purely periodic
// approximants p_n/q_n = 0.(phi(sigma^n(U)))^inf, q_n = b^{s_n}-1;
// certifies (big), (nsba3) with eps = 1/|U|, (sm), and pairwise
// distinctness of values within windows of m consecutive indices.
LadderReport overlap_ladder(const MorphicRepr& m, unsigned b,
                            std::size_t n_max);

struct TmmResult {
  std::size_t n = 0;
  unsigned b = 2;
  // Display index = 5*2^n + 2, counting the integer digit; the first
  // differing fractional digit sits at j - 1.
  std::size_t j = 0;
  bool agreement_ok = false;  // 5*2^n shared digits; then 0110 vs 1001
  bool lower_ok = false;      // |xi - p_n/q_n| >= b^-(5*2^n+3)
  bool upper_ok = false;      // |xi - p_n/q_n| <  b^-(5*2^n+1), any base
  // Sharper display exponent b^-(5*2^n+2); the divergence words give a
  // difference of about (1 - 1/b - 1/b^2 + 1/b^3) b^-(5*2^n+1), so this
  // form can only hold in base 2.
  bool upper_sharp_ok = false;
  PeriodicRational approximant;
};

// Thue-Morse approximants: xi = 0.t_0 t_1 t_2 ... in base b and
// p_n/q_n = 0.(sigma^n(011))^inf with q_n = b^{3*2^n} - 1; n >= 2.
TmmResult tmm_verify(unsigned b, std::size_t n);

struct ExponentRecord {
  mpz_class p, q;
  mpq_class exponent;  // max grid tau with sup|xi - p/q| < q^-tau
  bool certified = false;  // |x - p/q| < 1/q^2 at both interval endpoints
};

struct ExponentReport {
  std::vector<ExponentRecord> records;
  mpq_class max_exponent;
  std::size_t depth = 0;
};

// Continued-fraction convergents of the depth-digit truncation interval
// with exact grid-resolved approximation exponents (default step 1/64).
ExponentReport empirical_exponent(const DigitFn& stream, unsigned b,
                                  std::size_t depth,
                                  const mpq_class& grid_step = mpq_class(1,
                                                                         64));

enum class ConditionsMode { Baker, Lemma53 };

struct HeightErrorRecord {
  mpq_class height;     // H_n (or q_n)
  mpq_class error_lo;   // certified lower bound on |xi - alpha_n|
  mpq_class error_hi;   // certified upper bound
};

struct ConditionsParams {
  mpq_class epsilon;    // Baker: error_hi < H^-(2+eps)
  mpq_class s;          // Lemma53(i): H_n < H_{n+1} < H_n^s
  mpq_class eta;        // Lemma53(ii): error_hi < H_n^-eta
  mpq_class eta_prime;  // Lemma53(ii): error_lo > H_n^-eta'
};

struct ConditionsReport {
  std::vector<bool> record_ok;
  bool all_hold = false;
  std::string conclusion;
};

ConditionsReport ladder_conditions_report(
    const std::vector<HeightErrorRecord>& records, ConditionsMode mode,
    const ConditionsParams& params);

}  // namespace autoreal

#endif
