#ifndef AUTOREAL_BETA_HPP
#define AUTOREAL_BETA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoreal/cobham.hpp"
#include "autoreal/diophantine.hpp"
#include "autoreal/words.hpp"

namespace autoreal {

/// Q(beta) for the real root beta > 1 of a monic integer polynomial
/// (irreducibility is the caller's assertion; only a trial-division
/// smoke check is applied). The root enclosure refines on demand and is
/// internally synchronized; intervals only ever shrink.
class NumberField {
 public:
  // coeffs[i] is the X^i coefficient; leading coefficient must be 1.
  explicit NumberField(std::vector<mpz_class> minpoly);

  unsigned degree() const { return degree_; }
  const std::vector<mpz_class>& minpoly() const { return minpoly_; }

  // Enclosure of beta with hi - lo <= 2^-bits.
  std::pair<mpq_class, mpq_class> beta_enclosure(unsigned long bits) const;
  mpz_class beta_floor() const;

  mpq_class eval_poly(const mpq_class& x) const;

 private:
  std::vector<mpz_class> minpoly_;
  unsigned degree_;
  mutable std::mutex mu_;
  mutable mpq_class lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<mpz_class> minpoly);

/// Element sum coeffs[i] beta^i with exact rational coefficients.
class FieldElement {
 public:
  FieldElement();  // unattached zero; usable only with attached operands
  FieldElement(FieldPtr field, std::vector<mpq_class> coeffs);
  static FieldElement from_rational(FieldPtr field, const mpq_class& x);
  static FieldElement beta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;

  // Throws std::domain_error on zero (or on a nontrivial gcd with a
  // reducible modulus).
  FieldElement inverse() const;

  // -1/0/+1; exact zero test on coefficients, otherwise certified by
  // interval refinement of the beta enclosure.
  int sign() const;

  // Rational enclosure of the value at the given refinement level.
  std::pair<mpq_class, mpq_class> enclosure(unsigned long bits) const;

 private:
  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

enum class BetaClass { Pisot, Salem, Neither, BoundaryUnresolved };

struct PisotCertificate {
  BetaClass classification = BetaClass::BoundaryUnresolved;
  // Per conjugate (real root > 1 excluded): [modulus - err, modulus + err].
  std::vector<std::pair<double, double>> conjugate_moduli;
  double tolerance = 1e-10;
};

PisotCertificate classify_pisot_salem(const std::vector<mpz_class>& minpoly,
                                      double tol = 1e-10);

// Sum digit_n beta^-n over the word (1-based positions); digits must
// not exceed floor(beta).
FieldElement word_value(const Word& digits, const FieldPtr& field);

// Greedy (Renyi) expansion digits b_1..b_N of x in [0,1); every
// remainder is certified in [0,1) by sign tests, which is exactly the
// tail property: the value of the digits after position r is < beta^-r.
Word greedy_beta_expansion(const FieldElement& x, std::size_t N);

// Value of 0.U(V)^inf in base beta: (P(UV) - P(U)) / (beta^r (beta^s - 1)).
FieldElement beta_periodic_value(const Word& U, const Word& V,
                                 const FieldPtr& field);

struct BetaSeparation {
  mpq_class bound_lo, bound_hi;  // enclosure of 1/((s+1)^{l-1} beta^{j+s+l-1})
  bool holds = false;
  std::size_t depth_used = 0;
};

// |xi - alpha| > 1/((s+1)^{l-1} beta^{j+s+l-1}) for alpha = 0.U(V)^inf
// when the greedy digits of xi agree with alpha's written digits below
// j and differ at j > r+s. xi is enclosed via its greedy tail property.
BetaSeparation lemma_dist_prime_check(const Word& U, const Word& V,
                                      const FieldPtr& field,
                                      const DigitFn& xi_digits, std::size_t j,
                                      std::size_t max_depth = 1u << 12);

struct BetaLadderRecord {
  std::size_t n = 0;
  Word U_n, V_n;
  std::size_t r_n = 0, s_n = 0, t_n = 0;
  std::vector<mpz_class> annihilator;  // primitive integer polynomial
  mpz_class height;                    // max |coefficient| (upper-bound proxy)
  mpq_class err_lo, err_hi;            // certified bounds on |xi - alpha_n|
  bool h_ok = false;  // err_hi < height^-(1+1/d-eps) at grid resolution
  bool degenerate = false;  // V_n digits all zero (rational alpha_n)
};

struct BetaLadderReport {
  std::vector<BetaLadderRecord> records;
  std::size_t d = 0;
  mpq_class epsilon;
  ConditionsReport baker;
};

// Same U a V a seed machinery as build_ladder, with values and errors
// computed in Q(beta); xi = sum a_n beta^-n over M's output digits.
BetaLadderReport beta_ladder(const MorphicRepr& m, const FieldPtr& field,
                             std::size_t n_max,
                             const mpq_class& epsilon = mpq_class(1, 4));

}  // namespace autoreal

#endif
