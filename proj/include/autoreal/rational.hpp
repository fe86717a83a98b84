#ifndef AUTOREAL_RATIONAL_HPP
#define AUTOREAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace autoreal {

mpz_class pow_z(const mpz_class& base, unsigned long e);
mpz_class pow_z(unsigned long base, unsigned long e);

// b^e for integer e of either sign.
mpq_class pow_q(const mpq_class& base, long e);

// Parses "p/q" or "p" (q > 0 after normalization).
mpq_class parse_rational(const std::string& s);
std::string rational_str(const mpq_class& x);

// One factor base^exp of a product of integer powers; base > 0.
struct PowTerm {
  mpz_class base;
  unsigned long exp;
};

// Sign of lhs - rhs where each side is the product of its terms.
// Decided with exact integer arithmetic; a directed fixed-point
// interval pass avoids forming the full powers in the common case.
int cmp_pow_products(const std::vector<PowTerm>& lhs,
                     const std::vector<PowTerm>& rhs);

// x < q^(-tau) for x > 0, q >= 2, tau = a/c > 0.
bool lt_neg_pow(const mpq_class& x, const mpz_class& q, const mpq_class& tau);
// x > q^(-tau).
bool gt_neg_pow(const mpq_class& x, const mpz_class& q, const mpq_class& tau);
// x < y^tau for x, y > 0 and rational tau > 0.
bool lt_pow(const mpq_class& x, const mpq_class& y, const mpq_class& tau);

// Largest grid multiple tau = t*step with x < q^(-tau), scanned over
// t*step in [lo, hi]; returns lo - step when even tau = lo fails.
mpq_class max_exponent_on_grid(const mpq_class& x, const mpz_class& q,
                               const mpq_class& step, const mpq_class& lo,
                               const mpq_class& hi);

}  // namespace autoreal

#endif
