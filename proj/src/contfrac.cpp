#include "autoreal/contfrac.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "autoreal/rational.hpp"

namespace autoreal {

void CFWord::validate() const {
  for (const mpz_class& q : quotients)
    if (q < 1) throw std::invalid_argument("CFWord: partial quotient < 1");
}

std::vector<Convergent> convergents(const CFWord& cf) {
  cf.validate();
  std::vector<Convergent> out;
  mpz_class pm1 = 1, qm1 = 0, p0 = cf.a0, q0 = 1;
  out.push_back({p0, q0});
  for (const mpz_class& a : cf.quotients) {
    mpz_class p = a * p0 + pm1, q = a * q0 + qm1;
    pm1 = p0;
    qm1 = q0;
    p0 = p;
    q0 = q;
    out.push_back({p0, q0});
  }
  return out;
}

mpq_class convergent_value(const Convergent& c) {
  mpq_class v(c.p, c.q);
  v.canonicalize();
  return v;
}

CFWord cf_of_rational(const mpq_class& x) {
  CFWord cf;
  mpz_class a0;
  mpz_fdiv_q(a0.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  cf.a0 = a0;
  mpq_class r = x - mpq_class(a0);
  while (r != 0) {
    r = 1 / r;
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num().get_mpz_t(),
               r.get_den().get_mpz_t());
    cf.quotients.push_back(a);
    r -= mpq_class(a);
  }
  return cf;
}

mpq_class cf_value(const CFWord& cf) {
  std::vector<Convergent> cs = convergents(cf);
  return convergent_value(cs.back());
}

CFWord certified_cf_of_interval(const mpq_class& lo, const mpq_class& hi,
                                std::size_t max_quotients) {
  if (lo > hi) throw std::invalid_argument("certified_cf: lo > hi");
  if (lo == hi) return cf_of_rational(lo);

  auto floor_q = [](const mpq_class& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    return f;
  };

  CFWord cf;
  mpq_class u = lo, v = hi;
  mpz_class a = floor_q(u);
  cf.a0 = a;
  if (floor_q(v) != a) return cf;
  for (std::size_t i = 0; i < max_quotients; ++i) {
    mpq_class fu = u - mpq_class(a), fv = v - mpq_class(a);
    if (fu == 0 || fv == 0) break;  // an endpoint terminates here
    // Complete quotients of every x in the interval lie in [1/fv, 1/fu].
    u = 1 / fv;
    v = 1 / fu;
    a = floor_q(u);
    if (floor_q(v) != a) break;
    cf.quotients.push_back(a);
  }
  return cf;
}

mpz_class QuadraticNumber::height() const {
  mpz_class h = abs(c2);
  h = std::max(h, mpz_class(abs(c1)));
  h = std::max(h, mpz_class(abs(c0)));
  return h;
}

mpq_class QuadraticNumber::eval(const mpq_class& x) const {
  return (mpq_class(c2) * x + mpq_class(c1)) * x + mpq_class(c0);
}

void QuadraticNumber::refine(unsigned long bits) {
  int slo = sgn(eval(lo));
  if (slo == 0) {
    hi = lo;
    return;
  }
  mpq_class width_target = pow_q(mpq_class(1, 2), static_cast<long>(bits));
  while (hi - lo > width_target) {
    mpq_class mid = (lo + hi) / 2;
    int sm = sgn(eval(mid));
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

QuadraticNumber periodic_cf_quadratic(const std::vector<mpz_class>& U) {
  if (U.empty()) throw std::invalid_argument("periodic_cf_quadratic: empty");
  CFWord cf{0, U};
  std::vector<Convergent> cs = convergents(cf);
  std::size_t s = U.size();
  QuadraticNumber x;
  x.c2 = cs[s - 1].q;
  x.c1 = cs[s].q - cs[s - 1].p;
  x.c0 = -cs[s].p;
  x.lo = 0;
  x.hi = 1;
  if (sgn(x.eval(x.lo)) >= 0 || sgn(x.eval(x.hi)) <= 0)
    throw std::logic_error("periodic_cf_quadratic: root not isolated in (0,1)");
  return x;
}

CFWord cf_of_quadratic(QuadraticNumber& x, std::size_t n_quotients) {
  for (unsigned long bits = 64; bits <= (1ul << 22); bits *= 2) {
    x.refine(bits);
    CFWord cf = certified_cf_of_interval(x.lo, x.hi);
    if (cf.quotients.size() >= n_quotients) {
      cf.quotients.resize(n_quotients);
      return cf;
    }
  }
  throw std::runtime_error("cf_of_quadratic: precision cap reached");
}

namespace {

mpz_class parse_quotient(const std::string& tok) {
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0 || v < 1)
    throw std::domain_error("partial quotient letter '" + tok +
                            "' is not a positive integer");
  return v;
}

std::vector<mpz_class> word_quotients(const Word& w) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(parse_quotient(w.token(i)));
  return out;
}

// (c2, c1, c0) with content and leading sign removed.
std::array<mpz_class, 3> normal_form(const QuadraticNumber& x) {
  mpz_class g = gcd(gcd(x.c2, x.c1), x.c0);
  if (g == 0) g = 1;
  if (x.c2 < 0) g = -g;
  return {x.c2 / g, x.c1 / g, x.c0 / g};
}

}  // namespace

std::vector<QuadraticLadderRecord> quadratic_ladder(const MorphicRepr& m,
                                                    std::size_t n_max) {
  m.validate();
  StructuralHypotheses h = structural_hypotheses(m);
  if (!h.first_letter_repeats)
    throw std::invalid_argument(
        "quadratic_ladder: no first-letter recurrence found at scan depth");

  // Internal seed a U (the fixed point starts a U a ...).
  Word seed(m.sigma.source(), {m.start});
  seed = seed + *h.first_letter_repeats;

  std::vector<QuadraticLadderRecord> out;
  Word cur = seed;  // sigma^n(a U)
  std::size_t tn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    QuadraticLadderRecord rec;
    rec.n = n;
    rec.s_n = cur.size();
    rec.t_n = tn;
    rec.period = word_quotients(apply_morphism(m.phi, cur));
    rec.alpha = periodic_cf_quadratic(rec.period);
    rec.height = rec.alpha.height();

    // Continuants of xi = [0; b_1, b_2, ...] through s_n + t_n + 1.
    std::size_t need = rec.s_n + rec.t_n + 1;
    CFWord xi{0, word_quotients(m.output_prefix(need))};
    std::vector<Convergent> cs = convergents(xi);
    rec.q_s = cs[rec.s_n].q;
    rec.q_st = cs[rec.s_n + rec.t_n].q;
    rec.height_ok = rec.height < rec.q_s;

    // xi lies between p_N/q_N and (p_N + p_{N-1})/(q_N + q_{N-1}).
    std::size_t N = need;
    mpq_class e1 = convergent_value(cs[N]);
    mpq_class e2(cs[N].p + cs[N - 1].p, cs[N].q + cs[N - 1].q);
    e2.canonicalize();
    mpq_class xlo = std::min(e1, e2), xhi = std::max(e1, e2);

    mpq_class bound(1, rec.q_st * rec.q_st);
    bound.canonicalize();
    for (unsigned long bits = 2 * mpz_sizeinbase(rec.q_st.get_mpz_t(), 2) + 32;
         ; bits *= 2) {
      rec.alpha.refine(bits);
      mpq_class dmax = std::max(mpq_class(abs(xlo - rec.alpha.hi)),
                                mpq_class(abs(xhi - rec.alpha.lo)));
      if (dmax < bound) {
        rec.approx_ok = true;
        break;
      }
      // Separated and already too far: certified failure.
      if (rec.alpha.hi < xlo || rec.alpha.lo > xhi) {
        mpq_class dmin = rec.alpha.hi < xlo ? mpq_class(xlo - rec.alpha.hi)
                                            : mpq_class(rec.alpha.lo - xhi);
        if (dmin >= bound) {
          rec.approx_ok = false;
          break;
        }
      }
      if (bits > (1ul << 22))
        throw std::runtime_error("quadratic_ladder: precision cap reached");
    }

    rec.exponent_ratio =
        mpq_class(2 * mpz_sizeinbase(rec.q_st.get_mpz_t(), 2),
                  mpz_sizeinbase(rec.q_s.get_mpz_t(), 2));
    rec.exponent_ratio.canonicalize();
    if (!out.empty())
      rec.degenerate = normal_form(rec.alpha) == normal_form(out.back().alpha);
    out.push_back(std::move(rec));

    cur = apply_morphism(m.sigma, cur);
    tn *= m.k;
  }
  return out;
}

SeparationResult lemma_dist2_check(const CFWord& alpha, const CFWord& xi,
                                   const mpz_class& Mq) {
  alpha.validate();
  xi.validate();
  for (const mpz_class& q : alpha.quotients)
    if (q > Mq) throw std::invalid_argument("lemma_dist2: quotient exceeds M");
  for (const mpz_class& q : xi.quotients)
    if (q > Mq) throw std::invalid_argument("lemma_dist2: quotient exceeds M");
  if (alpha.a0 != xi.a0)
    throw std::invalid_argument("lemma_dist2: integer parts differ");

  std::size_t common = 0;
  while (common < alpha.quotients.size() && common < xi.quotients.size() &&
         alpha.quotients[common] == xi.quotients[common])
    ++common;
  if (common == alpha.quotients.size() && common == xi.quotients.size())
    throw std::invalid_argument("lemma_dist2: no disagreement in prefixes");

  SeparationResult res;
  res.n = common;
  std::vector<Convergent> cs = convergents(alpha);
  mpz_class qn = cs[common].q;
  res.bound = mpq_class(1, (Mq + 2) * (Mq + 2) * (Mq + 2) * qn * qn);
  res.bound.canonicalize();
  res.distance = abs(cf_value(alpha) - cf_value(xi));
  res.holds = res.distance >= res.bound;
  return res;
}

}  // namespace autoreal
