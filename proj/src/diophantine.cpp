#include "autoreal/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "autoreal/automaton.hpp"
#include "autoreal/contfrac.hpp"
#include "autoreal/rational.hpp"

namespace autoreal {

mpz_class measure_bound(unsigned long d, unsigned long k, unsigned long m) {
  if (d < 1 || k < 2 || m < 1)
    throw std::invalid_argument("measure_bound: need d >= 1, k >= 2, m >= 1");
  return mpz_class(d) * k * (pow_z(k, m) + 1);
}

namespace {

mpq_class pow_q_of_z(const mpz_class& base, unsigned long e) {
  return mpq_class(pow_z(base, e));
}

// upper < q^(-a/c)  <=>  upper^c * q^a < 1; margin = 1 - lhs.
InequalityCheck upper_pow_check(const mpq_class& upper, const mpz_class& q,
                                unsigned long a, unsigned long c) {
  InequalityCheck chk;
  mpq_class ratio(pow_z(upper.get_num(), c) * pow_z(q, a),
                  pow_z(upper.get_den(), c));
  ratio.canonicalize();
  chk.holds = ratio < 1;
  chk.margin = 1 - ratio;
  return chk;
}

// lower > q^(-a/c)  <=>  lower^c * q^a > 1; margin = lhs - 1.
InequalityCheck lower_pow_check(const mpq_class& lower, const mpz_class& q,
                                unsigned long a, unsigned long c) {
  InequalityCheck chk;
  mpq_class ratio(pow_z(lower.get_num(), c) * pow_z(q, a),
                  pow_z(lower.get_den(), c));
  ratio.canonicalize();
  chk.holds = ratio > 1;
  chk.margin = ratio - 1;
  return chk;
}

DistanceBounds separated_distance(const mpq_class& x, const DigitFn& stream,
                                  unsigned b, std::size_t depth,
                                  std::size_t max_depth) {
  for (;;) {
    DistanceBounds db = distance_bounds(x, stream, b, depth);
    if (db.separated || depth >= max_depth) return db;
    depth = std::min(2 * depth, max_depth);
  }
}

void fill_thresholds(LadderReport& rep,
                     const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    std::size_t first = rep.records.size();
    for (std::size_t i = rep.records.size(); i-- > 0;) {
      if (!rep.records[i].checks.at(name).holds) break;
      first = i;
    }
    if (first < rep.records.size()) rep.thresholds[name] = first;
  }
}

unsigned long checked_pow_ul(unsigned long base, unsigned long e,
                             const char* what) {
  mpz_class v = pow_z(base, e);
  if (!v.fits_ulong_p()) throw std::runtime_error(std::string(what) +
                                                  ": k^m overflow");
  return v.get_ui();
}

}  // namespace

LemmaDistResult lemma_dist_check(const PeriodicRational& x,
                                 const DigitFn& stream, std::size_t j,
                                 std::size_t max_depth) {
  if (j <= x.r)
    throw std::invalid_argument("lemma_dist: hypothesis j > r violated");
  for (std::size_t n = 1; n < j; ++n)
    if (x.digit(n) != stream(n))
      throw std::invalid_argument(
          "lemma_dist: digits disagree before the claimed index");
  if (x.digit(j) == stream(j))
    throw std::invalid_argument("lemma_dist: digits do not differ at j");

  LemmaDistResult res;
  res.bound = pow_q(mpq_class(x.b), -static_cast<long>(j + x.s));

  // The streams differ at position j, so an enclosure a little beyond j
  // separates from x unless the divergence cancels in lower digits; keep
  // deepening until the interval excludes x.
  std::size_t depth = j + 8;
  for (;;) {
    DistanceBounds db = distance_bounds(x.value, stream, x.b, depth);
    if (db.separated) {
      res.holds = db.lower > res.bound;
      res.depth_used = depth;
      return res;
    }
    if (depth >= max_depth)
      throw std::runtime_error(
          "lemma_dist: interval does not separate within the depth cap");
    depth = std::min(2 * depth, max_depth);
  }
}

LadderReport build_ladder(const MorphicRepr& M, unsigned b, std::size_t n_max,
                          const mpq_class& epsilon) {
  M.validate();
  if (epsilon <= 0) throw std::invalid_argument("build_ladder: epsilon <= 0");
  LadderReport rep;
  rep.b = b;
  rep.k = M.k;
  rep.epsilon = epsilon;
  rep.d = internal_alphabet_size(M);
  rep.m = kernel_size(to_automaton(M)).m;
  rep.periodicity_warning =
      looks_eventually_periodic(M.output_prefix(2 * (1u << 12)));

  DigitFn stream = morphic_digits(M, b);
  SecondOccurrence so =
      find_second_occurrence_prefix(M.internal_prefix(4 * rep.d + 4), rep.d);
  Word a_letter(M.sigma.source(), {so.a});
  Word sU = so.U;                   // sigma^n(U)
  Word saV = a_letter + so.V;       // sigma^n(a V)

  unsigned long e_a = mpz_class(epsilon.get_num()).get_ui();
  unsigned long e_c = mpz_class(epsilon.get_den()).get_ui();
  unsigned long km = checked_pow_ul(M.k, rep.m, "build_ladder");

  mpz_class tn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    ApproximantRecord rec;
    rec.n = n;
    rec.U_n = apply_morphism(M.phi, sU);
    rec.V_n = apply_morphism(M.phi, saV);
    rec.r_n = rec.U_n.size();
    rec.s_n = rec.V_n.size();
    rec.t_n = static_cast<std::size_t>(tn.get_ui());
    rec.value = periodic_value(rec.U_n, rec.V_n, b);
    mpz_class br = pow_z(static_cast<unsigned long>(b), rec.r_n);
    mpz_class bs = pow_z(static_cast<unsigned long>(b), rec.s_n);
    rec.q_unreduced = br * (bs - 1);

    std::size_t rst = rec.r_n + rec.s_n + rec.t_n;
    DistanceBounds db = distance_bounds(rec.value.value, stream, b, rst + 64);

    // (j): |xi - p_n/q_n| < 1/b^{r+s+t}
    InequalityCheck cj;
    {
      mpq_class ratio = db.upper * pow_q_of_z(b, rst);
      cj.holds = ratio < 1;
      cj.margin = 1 - ratio;
    }
    rec.checks["j"] = cj;

    // (nsba): < 1/q_n^{1+1/d}
    rec.checks["nsba"] = upper_pow_check(
        db.upper, rec.q_unreduced, static_cast<unsigned long>(rep.d) + 1,
        static_cast<unsigned long>(rep.d));

    // (cptv): q_{n+1} < q_n^{k+eps}, with q_{n+1} recomputed structurally.
    {
      mpz_class qn1 = pow_z(static_cast<unsigned long>(b), M.k * rec.r_n) *
                      (pow_z(static_cast<unsigned long>(b), M.k * rec.s_n) - 1);
      InequalityCheck chk;
      mpq_class ratio(pow_z(qn1, e_c),
                      pow_z(rec.q_unreduced, M.k * e_c + e_a));
      ratio.canonicalize();
      chk.holds = ratio < 1;
      chk.margin = 1 - ratio;
      rec.checks["cptv"] = chk;
    }

    // (mercikp): > 1/q_n^{k^m+1+eps}
    {
      std::size_t cap = 8 * rst + 4096;
      auto j0 = digit_agreement(rec.value, stream, cap);
      if (!j0)
        throw std::runtime_error(
            "build_ladder: approximant digits match the stream through the "
            "scan cap; sequence may be eventually periodic");
      DistanceBounds sep =
          separated_distance(rec.value.value, stream, b, *j0 + 32, 16 * cap);
      if (!sep.separated)
        throw std::runtime_error("build_ladder: interval failed to separate");
      rec.checks["mercikp"] = lower_pow_check(
          sep.lower, rec.q_unreduced, (km + 1) * e_c + e_a, e_c);
    }

    rep.records.push_back(std::move(rec));
    sU = apply_morphism(M.sigma, sU);
    saV = apply_morphism(M.sigma, saV);
    tn *= M.k;
  }

  for (std::size_t n = 0; n + 1 < rep.records.size(); ++n) {
    mpq_class g(rep.records[n + 1].r_n + rep.records[n + 1].s_n,
                rep.records[n].r_n + rep.records[n].s_n);
    g.canonicalize();
    rep.growth_ratios.push_back(g);
  }
  fill_thresholds(rep, {"j", "nsba", "cptv", "mercikp"});
  return rep;
}

LadderReport overlap_ladder(const MorphicRepr& M, unsigned b,
                            std::size_t n_max) {
  M.validate();
  StructuralHypotheses h = structural_hypotheses(M);
  if (!h.internal_overlap)
    throw std::invalid_argument(
        "overlap_ladder: no overlap prefix found at scan depth");
  Word U = *h.internal_overlap;

  LadderReport rep;
  rep.b = b;
  rep.k = M.k;
  rep.epsilon = mpq_class(1, static_cast<unsigned long>(U.size()));
  rep.d = internal_alphabet_size(M);
  rep.m = kernel_size(to_automaton(M)).m;
  rep.periodicity_warning =
      looks_eventually_periodic(M.output_prefix(2 * (1u << 12)));

  DigitFn stream = morphic_digits(M, b);
  unsigned long km = checked_pow_ul(M.k, rep.m, "overlap_ladder");
  unsigned long u_len = static_cast<unsigned long>(U.size());

  Word sU = U;
  mpz_class tn = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    ApproximantRecord rec;
    rec.n = n;
    rec.V_n = apply_morphism(M.phi, sU);
    rec.U_n = Word(rec.V_n.alphabet());
    rec.r_n = 0;
    rec.s_n = rec.V_n.size();
    rec.t_n = static_cast<std::size_t>(tn.get_ui());
    rec.value = periodic_value(rec.U_n, rec.V_n, b);
    rec.q_unreduced = pow_z(static_cast<unsigned long>(b), rec.s_n) - 1;

    // The fixed point starts sigma^n(U) sigma^n(U) sigma^n(a), so the
    // periodic approximant agrees through 2 s_n + t_n digits.
    std::size_t agree = 2 * rec.s_n + rec.t_n;
    DistanceBounds db =
        distance_bounds(rec.value.value, stream, b, agree + 64);

    InequalityCheck big;
    {
      mpq_class ratio = db.upper * pow_q_of_z(b, agree);
      big.holds = ratio < 1;
      big.margin = 1 - ratio;
    }
    rec.checks["big"] = big;

    // (nsba3): < 1/q_n^{2+1/|U|}
    rec.checks["nsba3"] =
        upper_pow_check(db.upper, rec.q_unreduced, 2 * u_len + 1, u_len);

    // (sm): > 1/b^{s_n (k^m+1)}
    {
      std::size_t cap = 8 * (rec.s_n + rec.t_n) + 4096;
      auto j0 = digit_agreement(rec.value, stream, cap);
      if (!j0)
        throw std::runtime_error(
            "overlap_ladder: approximant digits match the stream through "
            "the scan cap; sequence may be eventually periodic");
      DistanceBounds sep =
          separated_distance(rec.value.value, stream, b, *j0 + 32, 16 * cap);
      if (!sep.separated)
        throw std::runtime_error("overlap_ladder: interval failed to separate");
      InequalityCheck sm;
      mpq_class ratio =
          sep.lower *
          pow_q_of_z(b, static_cast<std::size_t>(rec.s_n) * (km + 1));
      sm.holds = ratio > 1;
      sm.margin = ratio - 1;
      rec.checks["sm"] = sm;
    }

    rep.records.push_back(std::move(rec));
    sU = apply_morphism(M.sigma, sU);
    tn *= M.k;
  }

  // Distinctness of values within every window of m consecutive indices.
  for (std::size_t i = 0; i < rep.records.size() && rep.distinctness_ok; ++i)
    for (std::size_t j2 = i + 1; j2 < rep.records.size() && j2 < i + rep.m;
         ++j2)
      if (rep.records[i].value.value == rep.records[j2].value.value)
        rep.distinctness_ok = false;

  for (std::size_t n = 0; n + 1 < rep.records.size(); ++n) {
    mpq_class g(rep.records[n + 1].s_n, rep.records[n].s_n);
    g.canonicalize();
    rep.growth_ratios.push_back(g);
  }
  fill_thresholds(rep, {"big", "nsba3", "sm"});
  return rep;
}

TmmResult tmm_verify(unsigned b, std::size_t n) {
  if (b < 2) throw std::invalid_argument("tmm_verify: base < 2");
  if (n < 2) throw std::invalid_argument("tmm_verify: n >= 2 required");

  // sigma^n(011) over {0,1} with sigma: 0 -> 01, 1 -> 10.
  AlphabetPtr bin = binary_alphabet();
  Morphism sigma(bin, bin,
                 {Word(bin, {0, 1}), Word(bin, {1, 0})});
  Word period(bin, {0, 1, 1});
  for (std::size_t i = 0; i < n; ++i) period = apply_morphism(sigma, period);

  TmmResult res;
  res.n = n;
  res.b = b;
  res.approximant = periodic_value(Word(bin), period, b);

  // xi = 0.t_0 t_1 t_2 ... with t the Thue-Morse sequence.
  DigitFn stream = [](std::size_t pos) -> unsigned {
    return static_cast<unsigned>(
        __builtin_popcountll(static_cast<unsigned long long>(pos - 1)) & 1);
  };

  // The shared prefix has 5*2^n fractional digits; j counts the integer
  // digit too, so the first differing fractional position is j - 1.
  std::size_t agree = 5 * (static_cast<std::size_t>(1) << n);
  res.j = agree + 2;
  auto first_diff = digit_agreement(res.approximant, stream, res.j + 4);
  res.agreement_ok = first_diff && *first_diff == agree + 1;
  if (res.agreement_ok) {
    // Divergence digits: stream continues 0110, approximant 1001.
    const unsigned want_stream[4] = {0, 1, 1, 0};
    const unsigned want_approx[4] = {1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
      if (stream(agree + 1 + i) != want_stream[i]) res.agreement_ok = false;
      if (res.approximant.digit(agree + 1 + i) != want_approx[i])
        res.agreement_ok = false;
    }
  }

  DistanceBounds db =
      separated_distance(res.approximant.value, stream, b, res.j + 80,
                         16 * (res.j + 80));
  if (!db.separated)
    throw std::runtime_error("tmm_verify: interval failed to separate");
  mpq_class sharp_bound = pow_q(mpq_class(b), -static_cast<long>(res.j));
  mpq_class upper_bound = pow_q(mpq_class(b), -static_cast<long>(res.j - 1));
  mpq_class lower_bound = pow_q(mpq_class(b), -static_cast<long>(res.j + 1));
  res.upper_ok = db.upper < upper_bound;
  res.upper_sharp_ok = db.upper < sharp_bound;
  res.lower_ok = db.lower >= lower_bound;
  return res;
}

ExponentReport empirical_exponent(const DigitFn& stream, unsigned b,
                                  std::size_t depth,
                                  const mpq_class& grid_step) {
  if (depth < 64) throw std::invalid_argument("empirical_exponent: depth < 64");
  if (grid_step <= 0)
    throw std::invalid_argument("empirical_exponent: grid step <= 0");

  {
    AlphabetPtr digits = digit_alphabet(b);
    Word w(digits);
    for (std::size_t i = 1; i <= depth; ++i) w.push_back(stream(i));
    if (looks_eventually_periodic(w))
      throw std::domain_error(
          "empirical_exponent: digit stream looks eventually periodic "
          "(rational target)");
  }

  TruncationInterval t = truncation_interval(stream, b, depth);
  CFWord cf = certified_cf_of_interval(t.lo, t.hi);
  std::vector<Convergent> cs = convergents(cf);

  ExponentReport rep;
  rep.depth = depth;
  rep.max_exponent = 0;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    ExponentRecord rec;
    rec.p = cs[i].p;
    rec.q = cs[i].q;
    mpq_class v = convergent_value(cs[i]);
    mpq_class dlo = abs(t.lo - v), dhi = abs(t.hi - v);
    mpq_class upper = std::max(dlo, dhi);
    mpq_class inv_q2(1, cs[i].q * cs[i].q);
    inv_q2.canonicalize();
    rec.certified = dlo < inv_q2 && dhi < inv_q2;
    if (upper == 0) {
      // Convergent coincides with an endpoint; exponent unbounded on the
      // grid — clamp to the scan ceiling below.
      upper = mpq_class(1, pow_z(static_cast<unsigned long>(b), depth));
    }
    rec.exponent = max_exponent_on_grid(upper, cs[i].q, grid_step, grid_step,
                                        mpq_class(256));
    if (rec.certified && rec.exponent > rep.max_exponent)
      rep.max_exponent = rec.exponent;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

namespace {

// x ? h^(a/c) as sign of x^c - h^a for positive rationals.
int cmp_q_pow(const mpq_class& x, const mpq_class& h, unsigned long a,
              unsigned long c) {
  return cmp_pow_products({{x.get_num(), c}, {h.get_den(), a}},
                          {{x.get_den(), c}, {h.get_num(), a}});
}

void split_tau(const mpq_class& tau, unsigned long& a, unsigned long& c) {
  a = mpz_class(tau.get_num()).get_ui();
  c = mpz_class(tau.get_den()).get_ui();
}

}  // namespace

ConditionsReport ladder_conditions_report(
    const std::vector<HeightErrorRecord>& records, ConditionsMode mode,
    const ConditionsParams& params) {
  ConditionsReport rep;
  rep.record_ok.assign(records.size(), true);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const HeightErrorRecord& r = records[i];
    if (r.height <= 1 || r.error_hi <= 0 || r.error_lo < 0 ||
        r.error_lo > r.error_hi) {
      rep.record_ok[i] = false;
      continue;
    }
    if (mode == ConditionsMode::Baker) {
      // error_hi < H^-(2+eps), heights strictly increasing.
      mpq_class tau = 2 + params.epsilon;
      unsigned long a, c;
      split_tau(tau, a, c);
      // error_hi < H^-(a/c)  <=>  error_hi^c * H^a < 1.
      mpq_class inv_h(r.height.get_den(), r.height.get_num());
      if (cmp_q_pow(r.error_hi, inv_h, a, c) >= 0) rep.record_ok[i] = false;
      if (i > 0 && !(records[i - 1].height < r.height))
        rep.record_ok[i] = false;
    } else {
      // (i) H_n < H_{n+1} < H_n^s.
      if (i + 1 < records.size()) {
        unsigned long sa, sc;
        split_tau(params.s, sa, sc);
        if (!(r.height < records[i + 1].height) ||
            cmp_q_pow(records[i + 1].height, r.height, sa, sc) >= 0)
          rep.record_ok[i] = false;
      }
      // (ii) H^-eta' < error_lo and error_hi < H^-eta.
      unsigned long ea, ec, epa, epc;
      split_tau(params.eta, ea, ec);
      split_tau(params.eta_prime, epa, epc);
      mpq_class inv_h(r.height.get_den(), r.height.get_num());
      if (cmp_q_pow(r.error_hi, inv_h, ea, ec) >= 0) rep.record_ok[i] = false;
      if (r.error_lo == 0 || cmp_q_pow(r.error_lo, inv_h, epa, epc) <= 0)
        rep.record_ok[i] = false;
    }
  }
  rep.all_hold = !records.empty() &&
                 std::all_of(rep.record_ok.begin(), rep.record_ok.end(),
                             [](bool v) { return v; });
  if (mode == ConditionsMode::Baker)
    rep.conclusion = rep.all_hold
                         ? "hypotheses of Baker's theorem hold on the "
                           "scanned range"
                         : "Baker hypotheses fail on the scanned range";
  else
    rep.conclusion = rep.all_hold
                         ? "not a U_t-number for t < eta, on the scanned range"
                         : "Liouville-exclusion hypotheses fail on the "
                           "scanned range";
  return rep;
}

}  // namespace autoreal
