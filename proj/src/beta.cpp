#include "autoreal/beta.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <tuple>

#include "autoreal/rational.hpp"

namespace autoreal {

namespace {

mpq_class half_pow(unsigned long bits) {
  return pow_q(mpq_class(1, 2), static_cast<long>(bits));
}

unsigned long parse_digit(const std::string& tok) {
  std::size_t pos = 0;
  unsigned long v;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw std::domain_error("non-numeric digit letter '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::domain_error("non-numeric digit letter '" + tok + "'");
  return v;
}

}  // namespace

NumberField::NumberField(std::vector<mpz_class> minpoly)
    : minpoly_(std::move(minpoly)) {
  while (minpoly_.size() > 1 && minpoly_.back() == 0) minpoly_.pop_back();
  if (minpoly_.size() < 3)
    throw std::invalid_argument("NumberField: degree must be >= 2");
  if (minpoly_.back() != 1)
    throw std::invalid_argument("NumberField: polynomial must be monic");
  degree_ = static_cast<unsigned>(minpoly_.size() - 1);

  // Smoke check against obvious reducibility: small integer roots.
  for (long x = -64; x <= 64; ++x) {
    mpq_class v = eval_poly(mpq_class(x));
    if (v == 0)
      throw std::invalid_argument(
          "NumberField: polynomial has the integer root " + std::to_string(x));
  }

  if (eval_poly(1) >= 0)
    throw std::invalid_argument(
        "NumberField: cannot isolate a real root > 1 (p(1) >= 0)");
  mpz_class cmax = 0;
  for (const mpz_class& c : minpoly_) cmax = std::max(cmax, mpz_class(abs(c)));
  lo_ = 1;
  hi_ = mpq_class(cmax + 2);
  if (eval_poly(hi_) <= 0)
    throw std::logic_error("NumberField: root bound violated");
}

mpq_class NumberField::eval_poly(const mpq_class& x) const {
  mpq_class v = 0;
  for (std::size_t i = minpoly_.size(); i-- > 0;) v = v * x + minpoly_[i];
  return v;
}

std::pair<mpq_class, mpq_class> NumberField::beta_enclosure(
    unsigned long bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  mpq_class target = half_pow(bits);
  while (hi_ - lo_ > target) {
    mpq_class mid = (lo_ + hi_) / 2;
    int s = sgn(eval_poly(mid));
    if (s == 0)
      throw std::logic_error("NumberField: rational root encountered");
    if (s < 0)
      lo_ = mid;
    else
      hi_ = mid;
  }
  return {lo_, hi_};
}

mpz_class NumberField::beta_floor() const {
  for (unsigned long bits = 8; bits <= 4096; bits *= 2) {
    auto [lo, hi] = beta_enclosure(bits);
    mpz_class flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), lo.get_num().get_mpz_t(),
               lo.get_den().get_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num().get_mpz_t(),
               hi.get_den().get_mpz_t());
    if (flo == fhi) return flo;
  }
  throw std::runtime_error("NumberField: beta is too close to an integer");
}

FieldPtr make_field(std::vector<mpz_class> minpoly) {
  return std::make_shared<NumberField>(std::move(minpoly));
}

FieldElement::FieldElement() = default;

FieldElement::FieldElement(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (coeffs_.size() > field_->degree())
    throw std::invalid_argument("FieldElement: coefficient vector too long");
  coeffs_.resize(field_->degree());
  for (mpq_class& c : coeffs_) c.canonicalize();
}

FieldElement FieldElement::from_rational(FieldPtr field, const mpq_class& x) {
  return FieldElement(std::move(field), {x});
}

FieldElement FieldElement::beta(FieldPtr field) {
  return FieldElement(std::move(field), {mpq_class(0), mpq_class(1)});
}

bool FieldElement::is_zero() const {
  for (const mpq_class& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("FieldElement: mixed fields");
  if (!a.field()) throw std::invalid_argument("FieldElement: unattached");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  std::vector<mpq_class> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  std::vector<mpq_class> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  if (!field_) throw std::invalid_argument("FieldElement: unattached");
  std::vector<mpq_class> c(coeffs_);
  for (mpq_class& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  std::size_t l = field_->degree();
  std::vector<mpq_class> prod(2 * l - 1, mpq_class(0));
  for (std::size_t i = 0; i < l; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  // Fold X^l = -sum_{j<l} m_j X^j (monic modulus).
  const std::vector<mpz_class>& m = field_->minpoly();
  for (std::size_t i = prod.size(); i-- > l;) {
    mpq_class t = prod[i];
    if (t == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < l; ++j) prod[i - l + j] -= t * m[j];
  }
  prod.resize(l);
  return FieldElement(field_, std::move(prod));
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(*this, o);
  return coeffs_ == o.coeffs_;
}

namespace {

using Poly = std::vector<mpq_class>;  // coeffs[i] * X^i, trimmed

std::size_t poly_deg(const Poly& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d;  // number of coefficients; 0 means zero polynomial
}

// r = a mod b, q accumulated into the Bezout update t = t0 - q*t1.
void poly_divmod_step(Poly& r0, Poly& r1, Poly& t0, Poly& t1) {
  std::size_t d1 = poly_deg(r1);
  while (poly_deg(r0) >= d1 && poly_deg(r0) > 0) {
    std::size_t d0 = poly_deg(r0);
    mpq_class f = r0[d0 - 1] / r1[d1 - 1];
    std::size_t shift = d0 - d1;
    for (std::size_t i = 0; i < d1; ++i) r0[i + shift] -= f * r1[i];
    if (t0.size() < t1.size() + shift) t0.resize(t1.size() + shift);
    for (std::size_t i = 0; i < t1.size(); ++i) t0[i + shift] -= f * t1[i];
    if (poly_deg(r0) == d0) r0[d0 - 1] = 0;  // numeric safety trim
  }
  std::swap(r0, r1);
  std::swap(t0, t1);
}

}  // namespace

FieldElement FieldElement::inverse() const {
  if (!field_) throw std::invalid_argument("FieldElement: unattached");
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  std::size_t l = field_->degree();
  Poly r0(field_->minpoly().size());
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = field_->minpoly()[i];
  Poly r1(coeffs_.begin(), coeffs_.end());
  Poly t0{mpq_class(0)}, t1{mpq_class(1)};
  while (poly_deg(r1) > 1) poly_divmod_step(r0, r1, t0, t1);
  if (poly_deg(r1) == 0)
    throw std::domain_error(
        "FieldElement: gcd with the modulus is non-constant (reducible?)");
  mpq_class g = r1[0];
  std::vector<mpq_class> inv(l, mpq_class(0));
  for (std::size_t i = 0; i < t1.size() && i < l; ++i) inv[i] = t1[i] / g;
  if (t1.size() > l) {
    // Bezout coefficient can reach degree l-1 at most for a field; any
    // overflow means the modulus was not what it claimed to be.
    for (std::size_t i = l; i < t1.size(); ++i)
      if (t1[i] != 0)
        throw std::domain_error("FieldElement: modulus is not irreducible");
  }
  return FieldElement(field_, std::move(inv));
}

std::pair<mpq_class, mpq_class> FieldElement::enclosure(
    unsigned long bits) const {
  if (!field_) throw std::invalid_argument("FieldElement: unattached");
  auto [blo, bhi] = field_->beta_enclosure(bits);
  // beta >= 1, so powers are monotone in the endpoints.
  mpq_class lo = 0, hi = 0, plo = 1, phi = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c > 0) {
      lo += c * plo;
      hi += c * phi;
    } else if (c < 0) {
      lo += c * phi;
      hi += c * plo;
    }
    plo *= blo;
    phi *= bhi;
  }
  return {lo, hi};
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  for (unsigned long bits = 32; bits <= (1ul << 22); bits *= 2) {
    auto [lo, hi] = enclosure(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::runtime_error(
      "FieldElement: sign did not separate from zero (reducible modulus?)");
}

PisotCertificate classify_pisot_salem(const std::vector<mpz_class>& minpoly,
                                      double tol) {
  std::vector<mpz_class> p = minpoly;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.size() < 3 || p.back() != 1)
    throw std::invalid_argument("classify: monic polynomial of degree >= 2");
  std::size_t l = p.size() - 1;

  using C = std::complex<double>;
  std::vector<double> cd(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cd[i] = p[i].get_d();
  auto eval = [&](C z) {
    C v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * z + cd[i];
    return v;
  };

  // Durand-Kerner simultaneous iteration.
  std::vector<C> z(l);
  C seed(0.4, 0.9);
  C acc = 1;
  for (std::size_t i = 0; i < l; ++i) {
    acc *= seed;
    z[i] = acc;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double move = 0;
    for (std::size_t i = 0; i < l; ++i) {
      C denom = 1;
      for (std::size_t k = 0; k < l; ++k)
        if (k != i) denom *= z[i] - z[k];
      C corr = eval(z[i]) / denom;
      z[i] -= corr;
      move = std::max(move, std::abs(corr));
    }
    if (move < 1e-15) break;
  }

  // Residual-based error radii (Weierstrass correction magnitude,
  // inflated by the degree).
  std::vector<double> radius(l);
  for (std::size_t i = 0; i < l; ++i) {
    C denom = 1;
    for (std::size_t k = 0; k < l; ++k)
      if (k != i) denom *= z[i] - z[k];
    radius[i] = static_cast<double>(l) * std::abs(eval(z[i]) / denom);
  }

  // The distinguished root: real, > 1.
  std::size_t beta_idx = l;
  double best = 1.0;
  for (std::size_t i = 0; i < l; ++i)
    if (std::abs(z[i].imag()) <= radius[i] + 1e-12 &&
        z[i].real() - radius[i] > 1.0 && z[i].real() > best) {
      best = z[i].real();
      beta_idx = i;
    }
  if (beta_idx == l)
    throw std::invalid_argument("classify: no real root > 1 found");

  PisotCertificate cert;
  cert.tolerance = tol;
  bool all_below = true, any_above = false, any_on = false, ambiguous = false;
  for (std::size_t i = 0; i < l; ++i) {
    if (i == beta_idx) continue;
    double m = std::abs(z[i]);
    double mlo = m - radius[i], mhi = m + radius[i];
    cert.conjugate_moduli.emplace_back(mlo, mhi);
    if (!(mhi < 1 - tol)) all_below = false;
    if (mlo > 1 + tol) any_above = true;
    if (mlo >= 1 - tol && mhi <= 1 + tol) any_on = true;
    if (mlo < 1 - tol && mhi > 1 - tol) ambiguous = true;
    if (mlo < 1 + tol && mhi > 1 + tol) ambiguous = true;
  }
  if (all_below)
    cert.classification = BetaClass::Pisot;
  else if (any_above)
    cert.classification = BetaClass::Neither;
  else if (any_on && !ambiguous)
    cert.classification = BetaClass::Salem;
  else
    cert.classification = BetaClass::BoundaryUnresolved;
  return cert;
}

namespace {

// Integer digit-string value sum d_i beta^{|W|-1-i} as a field element.
FieldElement horner_value(const Word& w, const FieldPtr& field) {
  FieldElement v = FieldElement::from_rational(field, 0);
  FieldElement b = FieldElement::beta(field);
  for (std::size_t i = 0; i < w.size(); ++i) {
    unsigned long d = parse_digit(w.token(i));
    v = v * b + FieldElement::from_rational(field, mpq_class(d));
  }
  return v;
}

FieldElement pow_element(const FieldElement& x, std::size_t e) {
  FieldElement r = FieldElement::from_rational(x.field(), 1);
  FieldElement base = x;
  for (; e > 0; e /= 2) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

}  // namespace

FieldElement word_value(const Word& digits, const FieldPtr& field) {
  mpz_class bfloor = field->beta_floor();
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (mpz_class(static_cast<unsigned long>(parse_digit(digits.token(i)))) >
        bfloor)
      throw std::domain_error("word_value: digit exceeds floor(beta)");
  FieldElement v = horner_value(digits, field);
  FieldElement invb = FieldElement::beta(field).inverse();
  return v * pow_element(invb, digits.size());
}

Word greedy_beta_expansion(const FieldElement& x, std::size_t N) {
  const FieldPtr& field = x.field();
  if (!field) throw std::invalid_argument("greedy: unattached element");
  if (x.sign() < 0 ||
      (x - FieldElement::from_rational(field, 1)).sign() >= 0)
    throw std::invalid_argument("greedy: x outside [0, 1)");

  mpz_class bfloor = field->beta_floor();
  unsigned long bmax = bfloor.get_ui();
  AlphabetPtr alpha = digit_alphabet(static_cast<unsigned>(bmax) + 1);
  FieldElement beta = FieldElement::beta(field);
  FieldElement cur = x;
  Word out(alpha);
  for (std::size_t n = 0; n < N; ++n) {
    FieldElement y = cur * beta;
    unsigned long digit = 0;
    for (unsigned long c = bmax; c > 0; --c) {
      if ((y - FieldElement::from_rational(field, mpq_class(c))).sign() >= 0) {
        digit = c;
        break;
      }
    }
    cur = y - FieldElement::from_rational(field, mpq_class(digit));
    // Remainder in [0,1) certifies the tail property at every prefix.
    if (cur.sign() < 0 ||
        (cur - FieldElement::from_rational(field, 1)).sign() >= 0)
      throw std::logic_error("greedy: remainder escaped [0, 1)");
    out.push_back(static_cast<uint32_t>(digit));
  }
  return out;
}

FieldElement beta_periodic_value(const Word& U, const Word& V,
                                 const FieldPtr& field) {
  if (V.empty())
    throw std::invalid_argument("beta_periodic_value: empty period");
  FieldElement puv = horner_value(U + V, field);
  FieldElement pu = horner_value(U, field);
  FieldElement beta = FieldElement::beta(field);
  FieldElement denom =
      pow_element(beta, U.size()) *
      (pow_element(beta, V.size()) - FieldElement::from_rational(field, 1));
  return (puv - pu) * denom.inverse();
}

BetaSeparation lemma_dist_prime_check(const Word& U, const Word& V,
                                      const FieldPtr& field,
                                      const DigitFn& xi_digits, std::size_t j,
                                      std::size_t max_depth) {
  std::size_t r = U.size(), s = V.size();
  if (V.empty()) throw std::invalid_argument("lemma_dist': empty period");
  if (j <= r + s)
    throw std::invalid_argument("lemma_dist': hypothesis j > r+s violated");

  auto alpha_digit = [&](std::size_t n) -> unsigned long {
    if (n <= r) return parse_digit(U.token(n - 1));
    return parse_digit(V.token((n - r - 1) % s));
  };
  for (std::size_t n = 1; n < j; ++n)
    if (alpha_digit(n) != xi_digits(n))
      throw std::invalid_argument(
          "lemma_dist': digits disagree before the claimed index");
  if (alpha_digit(j) == xi_digits(j))
    throw std::invalid_argument("lemma_dist': digits do not differ at j");

  std::size_t l = field->degree();
  FieldElement alpha = beta_periodic_value(U, V, field);
  FieldElement invb = FieldElement::beta(field).inverse();
  mpq_class pre(1, pow_z(static_cast<unsigned long>(s) + 1,
                         static_cast<unsigned long>(l) - 1));
  FieldElement bound = FieldElement::from_rational(field, pre) *
                       pow_element(invb, j + s + l - 1);

  BetaSeparation res;
  std::tie(res.bound_lo, res.bound_hi) = bound.enclosure(256);

  AlphabetPtr dal = digit_alphabet(
      static_cast<unsigned>(field->beta_floor().get_ui()) + 1);
  std::size_t N = j + l + 8;
  for (;;) {
    Word prefix(dal);
    for (std::size_t n = 1; n <= N; ++n)
      prefix.push_back(static_cast<uint32_t>(xi_digits(n)));
    FieldElement sn = word_value(prefix, field);
    FieldElement tail = pow_element(invb, N);
    // Greedy tail property: xi in [S_N, S_N + beta^-N).
    FieldElement f1 = alpha - sn;
    if (f1.sign() <= 0) {
      res.holds = ((sn - alpha) - bound).sign() > 0;
      res.depth_used = N;
      return res;
    }
    FieldElement f2 = f1 - tail;
    if (f2.sign() >= 0) {
      res.holds = (f2 - bound).sign() >= 0;
      res.depth_used = N;
      return res;
    }
    if (N >= max_depth)
      throw std::runtime_error(
          "lemma_dist': enclosure did not separate within the depth cap");
    N = std::min(2 * N, max_depth);
  }
}

namespace {

// Primitive integer annihilating polynomial of alpha: characteristic
// polynomial of its multiplication matrix, by Faddeev-LeVerrier.
std::vector<mpz_class> annihilator_of(const FieldElement& alpha) {
  std::size_t l = alpha.field()->degree();
  // mat[i][j]: beta^i coefficient of alpha * beta^j.
  std::vector<std::vector<mpq_class>> mat(l, std::vector<mpq_class>(l));
  FieldElement col = alpha;
  FieldElement beta = FieldElement::beta(alpha.field());
  for (std::size_t jcol = 0; jcol < l; ++jcol) {
    for (std::size_t i = 0; i < l; ++i) mat[i][jcol] = col.coeffs()[i];
    if (jcol + 1 < l) col = col * beta;
  }

  auto mat_mul = [&](const std::vector<std::vector<mpq_class>>& a,
                     const std::vector<std::vector<mpq_class>>& b) {
    std::vector<std::vector<mpq_class>> c(l, std::vector<mpq_class>(l));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j2 = 0; j2 < l; ++j2)
          c[i][j2] += a[i][k] * b[k][j2];
      }
    return c;
  };

  // charpoly coefficients: X^l + c_1 X^{l-1} + ... + c_l.
  std::vector<mpq_class> c(l + 1);
  c[0] = 1;
  std::vector<std::vector<mpq_class>> Ak = mat;
  for (std::size_t k = 1; k <= l; ++k) {
    mpq_class tr = 0;
    for (std::size_t i = 0; i < l; ++i) tr += Ak[i][i];
    c[k] = -tr / static_cast<long>(k);
    if (k < l) {
      for (std::size_t i = 0; i < l; ++i) Ak[i][i] += c[k];
      Ak = mat_mul(mat, Ak);
    }
  }

  // Clear denominators, remove content; coefficients listed low-to-high.
  mpz_class lcm = 1;
  for (const mpq_class& x : c)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> out(l + 1);
  mpz_class content = 0;
  for (std::size_t k = 0; k <= l; ++k) {
    mpq_class scaled = c[k] * mpq_class(lcm);
    scaled.canonicalize();
    out[l - k] = scaled.get_num();
    content = gcd(content, out[l - k]);
  }
  if (content > 1)
    for (mpz_class& x : out) x /= content;
  return out;
}

}  // namespace

BetaLadderReport beta_ladder(const MorphicRepr& M, const FieldPtr& field,
                             std::size_t n_max, const mpq_class& epsilon) {
  M.validate();
  BetaLadderReport rep;
  rep.d = internal_alphabet_size(M);
  rep.epsilon = epsilon;
  mpq_class tau = 1 + mpq_class(1, static_cast<unsigned long>(rep.d)) -
                  epsilon;
  if (tau <= 0)
    throw std::invalid_argument("beta_ladder: 1 + 1/d - eps must be positive");

  mpz_class bfloor = field->beta_floor();
  DigitFn stream = [m2 = std::make_shared<MorphicRepr>(M),
                    cache = std::make_shared<Word>(M.output_prefix(64))](
                       std::size_t n) -> unsigned {
    if (n == 0) throw std::invalid_argument("digits are 1-based");
    if (n > cache->size()) {
      std::size_t want = cache->size();
      while (want < n) want *= 2;
      *cache = m2->output_prefix(want);
    }
    return static_cast<unsigned>(parse_digit(cache->token(n - 1)));
  };

  SecondOccurrence so =
      find_second_occurrence_prefix(M.internal_prefix(4 * rep.d + 4), rep.d);
  Word a_letter(M.sigma.source(), {so.a});
  Word sU = so.U;
  Word saV = a_letter + so.V;

  AlphabetPtr dal =
      digit_alphabet(static_cast<unsigned>(bfloor.get_ui()) + 1);
  FieldElement invb = FieldElement::beta(field).inverse();
  mpq_class bf_q(bfloor);

  std::vector<HeightErrorRecord> hrecs;
  std::size_t tn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    BetaLadderRecord rec;
    rec.n = n;
    rec.U_n = apply_morphism(M.phi, sU);
    rec.V_n = apply_morphism(M.phi, saV);
    rec.r_n = rec.U_n.size();
    rec.s_n = rec.V_n.size();
    rec.t_n = tn;
    rec.degenerate = true;
    for (std::size_t i = 0; i < rec.V_n.size(); ++i)
      if (parse_digit(rec.V_n.token(i)) != 0) rec.degenerate = false;

    FieldElement alpha = beta_periodic_value(rec.U_n, rec.V_n, field);
    rec.annihilator = annihilator_of(alpha);
    rec.height = 0;
    for (const mpz_class& x : rec.annihilator)
      rec.height = std::max(rec.height, mpz_class(abs(x)));

    // xi in [S_N, S_N + floor(beta) beta^-N / (beta-1)].
    std::size_t N = 2 * (rec.r_n + rec.s_n + rec.t_n) + 32;
    Word prefix(dal);
    for (std::size_t i = 1; i <= N; ++i)
      prefix.push_back(static_cast<uint32_t>(stream(i)));
    FieldElement sn = word_value(prefix, field);
    FieldElement tail =
        FieldElement::from_rational(field, bf_q) * pow_element(invb, N) *
        (FieldElement::beta(field) - FieldElement::from_rational(field, 1))
            .inverse();
    FieldElement f1 = alpha - sn;
    FieldElement f2 = f1 - tail;
    unsigned long bits = 4 * (rec.r_n + rec.s_n + rec.t_n) + 64;
    if (f1.sign() <= 0) {
      auto [dlo, dhi] = (-f1).enclosure(bits);
      auto [tlo, thi] = (-f2).enclosure(bits);
      rec.err_lo = std::max(mpq_class(0), dlo);
      rec.err_hi = thi;
    } else if (f2.sign() >= 0) {
      auto [dlo, dhi] = f2.enclosure(bits);
      auto [tlo, thi] = f1.enclosure(bits);
      rec.err_lo = std::max(mpq_class(0), dlo);
      rec.err_hi = thi;
    } else {
      auto [alo, ahi] = f1.enclosure(bits);
      auto [blo2, bhi2] = (-f2).enclosure(bits);
      rec.err_lo = 0;
      rec.err_hi = std::max(ahi, bhi2);
    }

    // (h)-style comparison: err_hi < H^-(1+1/d-eps).
    if (rec.err_hi <= 0) {
      rec.h_ok = true;
    } else {
      unsigned long ta = mpz_class(tau.get_num()).get_ui();
      unsigned long tc = mpz_class(tau.get_den()).get_ui();
      rec.h_ok = cmp_pow_products({{rec.err_hi.get_num(), tc},
                                   {rec.height, ta}},
                                  {{rec.err_hi.get_den(), tc}}) < 0;
    }

    hrecs.push_back({mpq_class(rec.height), rec.err_lo, rec.err_hi});
    rep.records.push_back(std::move(rec));
    sU = apply_morphism(M.sigma, sU);
    saV = apply_morphism(M.sigma, saV);
    tn *= M.k;
  }

  ConditionsParams params;
  params.epsilon = epsilon;
  rep.baker = ladder_conditions_report(hrecs, ConditionsMode::Baker, params);
  return rep;
}

}  // namespace autoreal
