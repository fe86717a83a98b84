#include "autoreal/rational.hpp"

#include <stdexcept>

namespace autoreal {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class pow_z(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpq_class pow_q(const mpq_class& base, long e) {
  if (e >= 0) {
    mpq_class r(pow_z(base.get_num(), static_cast<unsigned long>(e)),
                pow_z(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw std::domain_error("pow_q: 0 to negative power");
  mpq_class r(pow_z(base.get_den(), static_cast<unsigned long>(-e)),
              pow_z(base.get_num(), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::invalid_argument("bad rational: " + s);
  return r;
}

std::string rational_str(const mpq_class& x) { return x.get_str(); }

namespace {

constexpr std::size_t kPrecBits = 896;

// Enclosure m_lo*2^e <= value <= m_hi*2^e with bounded mantissas.
struct ZInterval {
  mpz_class lo, hi;
  long e = 0;

  static ZInterval from(const mpz_class& v) {
    ZInterval z{v, v, 0};
    z.normalize();
    return z;
  }

  void normalize() {
    std::size_t bits = mpz_sizeinbase(hi.get_mpz_t(), 2);
    if (bits <= kPrecBits) return;
    unsigned long shift = static_cast<unsigned long>(bits - kPrecBits);
    mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), shift);
    mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), shift);
    e += static_cast<long>(shift);
  }

  ZInterval operator*(const ZInterval& o) const {
    ZInterval r{lo * o.lo, hi * o.hi, e + o.e};
    r.normalize();
    return r;
  }

  ZInterval pow(unsigned long n) const {
    ZInterval acc{1, 1, 0};
    ZInterval b = *this;
    while (n) {
      if (n & 1) acc = acc * b;
      b = b * b;
      n >>= 1;
    }
    return acc;
  }
};

// -1 if a < b certainly, +1 if a > b certainly, 0 if undecided.
int cmp_zintervals(const ZInterval& a, const ZInterval& b) {
  mpz_class ahi = a.hi, blo = b.lo, alo = a.lo, bhi = b.hi;
  long d = a.e - b.e;
  if (d > 0) {
    mpz_mul_2exp(ahi.get_mpz_t(), ahi.get_mpz_t(), d);
    mpz_mul_2exp(alo.get_mpz_t(), alo.get_mpz_t(), d);
  } else if (d < 0) {
    mpz_mul_2exp(bhi.get_mpz_t(), bhi.get_mpz_t(), -d);
    mpz_mul_2exp(blo.get_mpz_t(), blo.get_mpz_t(), -d);
  }
  if (ahi < blo) return -1;
  if (alo > bhi) return 1;
  return 0;
}

mpz_class exact_product(const std::vector<PowTerm>& terms) {
  mpz_class r = 1;
  for (const auto& t : terms) r *= pow_z(t.base, t.exp);
  return r;
}

}  // namespace

int cmp_pow_products(const std::vector<PowTerm>& lhs,
                     const std::vector<PowTerm>& rhs) {
  for (const auto& t : lhs)
    if (t.base <= 0) throw std::domain_error("cmp_pow_products: base <= 0");
  for (const auto& t : rhs)
    if (t.base <= 0) throw std::domain_error("cmp_pow_products: base <= 0");

  ZInterval a{1, 1, 0}, b{1, 1, 0};
  for (const auto& t : lhs) a = a * ZInterval::from(t.base).pow(t.exp);
  for (const auto& t : rhs) b = b * ZInterval::from(t.base).pow(t.exp);
  int c = cmp_zintervals(a, b);
  if (c != 0) return c;

  mpz_class ea = exact_product(lhs), eb = exact_product(rhs);
  return cmp(ea, eb);
}

bool lt_neg_pow(const mpq_class& x, const mpz_class& q, const mpq_class& tau) {
  if (x <= 0) throw std::domain_error("lt_neg_pow: x <= 0");
  if (tau <= 0) throw std::domain_error("lt_neg_pow: tau <= 0");
  unsigned long a = static_cast<unsigned long>(tau.get_num().get_ui());
  unsigned long c = static_cast<unsigned long>(tau.get_den().get_ui());
  // x < q^(-a/c)  <=>  xn^c * q^a < xd^c
  return cmp_pow_products({{x.get_num(), c}, {q, a}}, {{x.get_den(), c}}) < 0;
}

bool gt_neg_pow(const mpq_class& x, const mpz_class& q, const mpq_class& tau) {
  if (x <= 0) throw std::domain_error("gt_neg_pow: x <= 0");
  if (tau <= 0) throw std::domain_error("gt_neg_pow: tau <= 0");
  unsigned long a = static_cast<unsigned long>(tau.get_num().get_ui());
  unsigned long c = static_cast<unsigned long>(tau.get_den().get_ui());
  return cmp_pow_products({{x.get_num(), c}, {q, a}}, {{x.get_den(), c}}) > 0;
}

bool lt_pow(const mpq_class& x, const mpq_class& y, const mpq_class& tau) {
  if (x <= 0 || y <= 0) throw std::domain_error("lt_pow: nonpositive operand");
  if (tau <= 0) throw std::domain_error("lt_pow: tau <= 0");
  unsigned long a = static_cast<unsigned long>(tau.get_num().get_ui());
  unsigned long c = static_cast<unsigned long>(tau.get_den().get_ui());
  // (xn/xd)^c < (yn/yd)^a
  return cmp_pow_products({{x.get_num(), c}, {y.get_den(), a}},
                          {{x.get_den(), c}, {y.get_num(), a}}) < 0;
}

mpq_class max_exponent_on_grid(const mpq_class& x, const mpz_class& q,
                               const mpq_class& step, const mpq_class& lo,
                               const mpq_class& hi) {
  if (step <= 0 || lo <= 0 || hi < lo)
    throw std::invalid_argument("max_exponent_on_grid: bad grid");
  mpq_class tlo = lo / step, thi = hi / step;
  long a = static_cast<long>(mpz_class(tlo.get_num() / tlo.get_den()).get_si());
  long b = static_cast<long>(mpz_class(thi.get_num() / thi.get_den()).get_si());
  if (!lt_neg_pow(x, q, mpq_class(a) * step)) return (mpq_class(a) - 1) * step;
  // Largest t in [a, b] with x < q^(-t*step); predicate is monotone in t.
  while (a < b) {
    long mid = a + (b - a + 1) / 2;
    if (lt_neg_pow(x, q, mpq_class(mid) * step))
      a = mid;
    else
      b = mid - 1;
  }
  return mpq_class(a) * step;
}

}  // namespace autoreal
