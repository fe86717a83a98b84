// Command-line front end: evaluation, conversions, ladders, and the
// certification commands, with optional JSON reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "autoreal/automaton.hpp"
#include "autoreal/beta.hpp"
#include "autoreal/cobham.hpp"
#include "autoreal/contfrac.hpp"
#include "autoreal/digits.hpp"
#include "autoreal/diophantine.hpp"
#include "autoreal/json_io.hpp"
#include "autoreal/rational.hpp"
#include "autoreal/words.hpp"

namespace {

using namespace autoreal;

constexpr int kExitOk = 0;
constexpr int kExitCertFailed = 1;
constexpr int kExitInputError = 2;

std::size_t apply_depth_cap(std::size_t depth) {
  const char* cap = std::getenv("AUTOREAL_MAX_DEPTH");
  if (!cap) return depth;
  unsigned long v = std::stoul(cap);
  return std::min<std::size_t>(depth, v);
}

// Inputs may hold either an automaton or a morphic representation.
struct SequenceInput {
  std::optional<DFAO> dfao;
  std::optional<MorphicRepr> morphic;

  MorphicRepr as_morphic() const {
    if (morphic) return *morphic;
    return to_morphic(*dfao);
  }
  DFAO as_dfao() const {
    if (dfao) return *dfao;
    return to_automaton(*morphic);
  }
};

SequenceInput load_sequence(const std::string& path) {
  ojson j = load_json_file(path);
  SequenceInput in;
  if (j.contains("states"))
    in.dfao = dfao_from_json(j);
  else
    in.morphic = morphic_from_json(j);
  return in;
}

std::string word_str(const Word& w) {
  bool single = true;
  for (std::size_t i = 0; i < w.alphabet()->size(); ++i)
    if (w.alphabet()->letter(i).size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += " ";
    out += w.token(i);
  }
  return out;
}

std::vector<mpz_class> parse_int_list(const std::string& s) {
  std::vector<mpz_class> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

ojson cf_json(const CFWord& cf) {
  ojson j;
  j["a0"] = cf.a0.get_str();
  ojson q = ojson::array();
  for (const mpz_class& a : cf.quotients) q.push_back(a.get_str());
  j["quotients"] = q;
  return j;
}

ojson checks_json(const ApproximantRecord& rec) {
  ojson arr = ojson::array();
  for (const auto& [name, chk] : rec.checks) {
    ojson c;
    c["index"] = rec.n;
    c["inequality"] = name;
    c["holds"] = chk.holds;
    c["margin_num"] = chk.margin.get_num().get_str();
    c["margin_den"] = chk.margin.get_den().get_str();
    arr.push_back(c);
  }
  return arr;
}

void emit(bool json, const ojson& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

bool ladder_ok(const LadderReport& rep,
               const std::vector<std::string>& always,
               const std::vector<std::string>& eventual) {
  for (const std::string& name : always) {
    auto it = rep.thresholds.find(name);
    if (it == rep.thresholds.end() || it->second != 0) return false;
  }
  for (const std::string& name : eventual)
    if (!rep.thresholds.count(name)) return false;
  return rep.distinctness_ok;
}

std::string ladder_text(const LadderReport& rep) {
  std::ostringstream os;
  os << "d=" << rep.d << " m=" << rep.m << " k=" << rep.k << " b=" << rep.b
     << " epsilon=" << rational_str(rep.epsilon) << "\n";
  if (rep.periodicity_warning)
    os << "warning: digit stream looks eventually periodic\n";
  for (const auto& rec : rep.records) {
    os << "n=" << rec.n << " r=" << rec.r_n << " s=" << rec.s_n
       << " t=" << rec.t_n;
    for (const auto& [name, chk] : rec.checks)
      os << " " << name << "=" << (chk.holds ? "holds" : "FAILS");
    os << "\n";
  }
  for (const auto& [name, idx] : rep.thresholds)
    os << "threshold " << name << ": n >= " << idx << "\n";
  if (!rep.distinctness_ok) os << "distinctness violated\n";
  return os.str();
}

ojson ladder_json(const LadderReport& rep) {
  ojson j;
  j["d"] = rep.d;
  j["m"] = rep.m;
  j["k"] = rep.k;
  j["b"] = rep.b;
  j["epsilon"] = rational_str(rep.epsilon);
  j["periodicity_warning"] = rep.periodicity_warning;
  j["distinctness_ok"] = rep.distinctness_ok;
  ojson checks = ojson::array();
  for (const auto& rec : rep.records)
    for (const auto& c : checks_json(rec)) checks.push_back(c);
  j["checks"] = checks;
  ojson th = ojson::object();
  for (const auto& [name, idx] : rep.thresholds) th[name] = idx;
  j["thresholds"] = th;
  ojson gr = ojson::array();
  for (const auto& g : rep.growth_ratios) gr.push_back(rational_str(g));
  j["growth_ratios"] = gr;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Diophantine toolkit for automatic reals"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON");

  std::string input, stream_input, u_str, v_str, lo_str, hi_str;
  std::string quotients_str, alpha_str, xi_str, minpoly_str, x_str, digits_str;
  std::string epsilon_str = "1/4", step_str = "1/64";
  unsigned long n_arg = 0, base = 2, d_arg = 1, k_arg = 2, m_arg = 1;
  long alpha_a0 = 0, xi_a0 = 0;
  unsigned long count = 32, n_max = 5, depth = 256, j_arg = 0;
  std::string mq_str = "2";
  double tol = 1e-10;

  auto* c_eval = app.add_subcommand("eval", "sequence term at an index");
  c_eval->add_option("--input", input)->required();
  c_eval->add_option("--n", n_arg)->required();

  auto* c_prefix = app.add_subcommand("prefix", "first letters of a sequence");
  c_prefix->add_option("--input", input)->required();
  c_prefix->add_option("--count", count);

  auto* c_kernel = app.add_subcommand("kernel", "kernel cardinality");
  c_kernel->add_option("--input", input)->required();

  auto* c_min = app.add_subcommand("minimize", "minimized automaton");
  c_min->add_option("--input", input)->required();

  auto* c_rev = app.add_subcommand("reverse", "reverse the reading order");
  c_rev->add_option("--input", input)->required();

  auto* c_cob = app.add_subcommand(
      "cobham", "convert automaton <-> morphic representation");
  c_cob->add_option("--input", input)->required();

  auto* c_bound = app.add_subcommand("bound", "irrationality-measure bound");
  c_bound->add_option("--d", d_arg)->required();
  c_bound->add_option("--k", k_arg)->required();
  c_bound->add_option("--m", m_arg)->required();

  auto* c_ladder = app.add_subcommand("ladder", "rational approximant ladder");
  c_ladder->add_option("--input", input)->required();
  c_ladder->add_option("--base", base);
  c_ladder->add_option("--n-max", n_max);
  c_ladder->add_option("--epsilon", epsilon_str);

  auto* c_oladder =
      app.add_subcommand("overlap-ladder", "overlap-based approximant ladder");
  c_oladder->add_option("--input", input)->required();
  c_oladder->add_option("--base", base);
  c_oladder->add_option("--n-max", n_max);

  auto* c_tmm = app.add_subcommand("tmm", "Thue-Morse approximant check");
  c_tmm->add_option("--base", base);
  c_tmm->add_option("--n", n_arg)->required();

  auto* c_exp = app.add_subcommand("exponent", "empirical exponent report");
  c_exp->add_option("--input", input)->required();
  c_exp->add_option("--base", base);
  c_exp->add_option("--depth", depth);
  c_exp->add_option("--step", step_str);

  auto* c_ld = app.add_subcommand("lemma-dist", "rational separation bound");
  c_ld->add_option("--input", input)->required();
  c_ld->add_option("--base", base);
  c_ld->add_option("--U", u_str);
  c_ld->add_option("--V", v_str)->required();
  c_ld->add_option("--j", j_arg)->required();

  auto* c_cf = app.add_subcommand("cf", "certified interval continued fraction");
  c_cf->add_option("--lo", lo_str)->required();
  c_cf->add_option("--hi", hi_str)->required();

  auto* c_cfq = app.add_subcommand("cf-quadratic",
                                   "periodic continued fraction as a root");
  c_cfq->add_option("--quotients", quotients_str)->required();

  auto* c_cfl = app.add_subcommand("cf-ladder", "quadratic approximant ladder");
  c_cfl->add_option("--input", input)->required();
  c_cfl->add_option("--n-max", n_max);

  auto* c_ld2 =
      app.add_subcommand("lemma-dist2", "continued-fraction separation bound");
  c_ld2->add_option("--alpha-a0", alpha_a0);
  c_ld2->add_option("--alpha", alpha_str)->required();
  c_ld2->add_option("--xi-a0", xi_a0);
  c_ld2->add_option("--xi", xi_str)->required();
  c_ld2->add_option("--M", mq_str);

  auto* c_bc = app.add_subcommand("beta-classify", "Pisot/Salem class");
  c_bc->add_option("--minpoly", minpoly_str)->required();
  c_bc->add_option("--tol", tol);

  auto* c_be = app.add_subcommand("beta-expand", "greedy beta-expansion");
  c_be->add_option("--minpoly", minpoly_str)->required();
  c_be->add_option("--x", x_str)->required();
  c_be->add_option("--count", count);

  auto* c_bl = app.add_subcommand("beta-ladder", "field approximant ladder");
  c_bl->add_option("--input", input)->required();
  c_bl->add_option("--minpoly", minpoly_str)->required();
  c_bl->add_option("--n-max", n_max);
  c_bl->add_option("--epsilon", epsilon_str);

  auto* c_ldp =
      app.add_subcommand("lemma-dist-prime", "beta-expansion separation bound");
  c_ldp->add_option("--minpoly", minpoly_str)->required();
  c_ldp->add_option("--U", u_str);
  c_ldp->add_option("--V", v_str)->required();
  c_ldp->add_option("--digits", digits_str)->required();
  c_ldp->add_option("--j", j_arg)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (c_eval->parsed()) {
    DFAO a = load_sequence(input).as_dfao();
    std::string letter = eval(a, mpz_class(n_arg));
    ojson j;
    j["n"] = n_arg;
    j["letter"] = letter;
    emit(json, j, letter + "\n");
    return kExitOk;
  }

  if (c_prefix->parsed()) {
    count = apply_depth_cap(count);
    SequenceInput in = load_sequence(input);
    Word w = in.morphic ? in.morphic->output_prefix(count)
                        : sequence_prefix(*in.dfao, count);
    ojson j;
    j["prefix"] = word_str(w);
    emit(json, j, word_str(w) + "\n");
    return kExitOk;
  }

  if (c_kernel->parsed()) {
    KernelResult res = kernel_size(load_sequence(input).as_dfao());
    ojson j;
    j["m"] = res.m;
    ojson reps = ojson::array();
    std::ostringstream os;
    os << "m=" << res.m << "\n";
    for (const auto& [i, jj] : res.representatives) {
      ojson r;
      r["i"] = i;
      r["j"] = jj.get_str();
      reps.push_back(r);
      os << "representative i=" << i << " j=" << jj.get_str() << "\n";
    }
    j["representatives"] = reps;
    emit(json, j, os.str());
    return kExitOk;
  }

  if (c_min->parsed()) {
    std::cout << dfao_to_json(minimize(load_sequence(input).as_dfao())).dump(2)
              << "\n";
    return kExitOk;
  }

  if (c_rev->parsed()) {
    std::cout << dfao_to_json(reverse_reading(load_sequence(input).as_dfao()))
                     .dump(2)
              << "\n";
    return kExitOk;
  }

  if (c_cob->parsed()) {
    SequenceInput in = load_sequence(input);
    if (in.dfao)
      std::cout << morphic_to_json(to_morphic(*in.dfao)).dump(2) << "\n";
    else
      std::cout << dfao_to_json(to_automaton(*in.morphic)).dump(2) << "\n";
    return kExitOk;
  }

  if (c_bound->parsed()) {
    mpz_class M = measure_bound(d_arg, k_arg, m_arg);
    ojson j;
    j["M"] = M.get_str();
    emit(json, j, M.get_str() + "\n");
    return kExitOk;
  }

  if (c_ladder->parsed()) {
    LadderReport rep =
        build_ladder(load_sequence(input).as_morphic(),
                     static_cast<unsigned>(base), n_max,
                     parse_rational(epsilon_str));
    emit(json, ladder_json(rep), ladder_text(rep));
    return ladder_ok(rep, {"j", "nsba"}, {"cptv", "mercikp"}) ? kExitOk
                                                              : kExitCertFailed;
  }

  if (c_oladder->parsed()) {
    LadderReport rep = overlap_ladder(load_sequence(input).as_morphic(),
                                      static_cast<unsigned>(base), n_max);
    emit(json, ladder_json(rep), ladder_text(rep));
    return ladder_ok(rep, {"big"}, {"nsba3", "sm"}) ? kExitOk
                                                    : kExitCertFailed;
  }

  if (c_tmm->parsed()) {
    TmmResult res = tmm_verify(static_cast<unsigned>(base), n_arg);
    ojson j;
    j["n"] = res.n;
    j["b"] = res.b;
    j["j"] = res.j;
    j["agreement_ok"] = res.agreement_ok;
    j["lower_ok"] = res.lower_ok;
    j["upper_ok"] = res.upper_ok;
    j["upper_sharp_ok"] = res.upper_sharp_ok;
    std::ostringstream os;
    os << "j=" << res.j << " agreement=" << (res.agreement_ok ? "ok" : "FAIL")
       << " lower=" << (res.lower_ok ? "ok" : "FAIL")
       << " upper=" << (res.upper_ok ? "ok" : "FAIL")
       << " upper_sharp=" << (res.upper_sharp_ok ? "ok" : "no") << "\n";
    emit(json, j, os.str());
    return res.agreement_ok && res.lower_ok && res.upper_ok ? kExitOk
                                                            : kExitCertFailed;
  }

  if (c_exp->parsed()) {
    depth = apply_depth_cap(depth);
    SequenceInput in = load_sequence(input);
    DigitFn stream = in.morphic
                         ? morphic_digits(*in.morphic,
                                          static_cast<unsigned>(base))
                         : dfao_digits(*in.dfao, static_cast<unsigned>(base));
    ExponentReport rep = empirical_exponent(stream,
                                            static_cast<unsigned>(base), depth,
                                            parse_rational(step_str));
    ojson j;
    j["depth"] = rep.depth;
    j["max_exponent"] = rational_str(rep.max_exponent);
    ojson recs = ojson::array();
    std::ostringstream os;
    for (const auto& r : rep.records) {
      ojson rj;
      rj["p"] = r.p.get_str();
      rj["q"] = r.q.get_str();
      rj["exponent"] = rational_str(r.exponent);
      rj["certified"] = r.certified;
      recs.push_back(rj);
      if (r.certified)
        os << r.p.get_str() << "/" << r.q.get_str() << " exponent "
           << rational_str(r.exponent) << "\n";
    }
    j["records"] = recs;
    os << "max exponent " << rational_str(rep.max_exponent) << "\n";
    emit(json, j, os.str());
    return kExitOk;
  }

  if (c_ld->parsed()) {
    SequenceInput in = load_sequence(input);
    DigitFn stream = in.morphic
                         ? morphic_digits(*in.morphic,
                                          static_cast<unsigned>(base))
                         : dfao_digits(*in.dfao, static_cast<unsigned>(base));
    AlphabetPtr dal = digit_alphabet(static_cast<unsigned>(base));
    PeriodicRational x = periodic_value(Word::parse(dal, u_str),
                                        Word::parse(dal, v_str),
                                        static_cast<unsigned>(base));
    LemmaDistResult res = lemma_dist_check(x, stream, j_arg);
    ojson j;
    j["bound"] = rational_to_json(res.bound);
    j["holds"] = res.holds;
    std::ostringstream os;
    os << "bound " << rational_str(res.bound) << " "
       << (res.holds ? "holds" : "FAILS") << "\n";
    emit(json, j, os.str());
    return res.holds ? kExitOk : kExitCertFailed;
  }

  if (c_cf->parsed()) {
    CFWord cf =
        certified_cf_of_interval(parse_rational(lo_str), parse_rational(hi_str));
    std::ostringstream os;
    os << "[" << cf.a0.get_str();
    for (std::size_t i = 0; i < cf.quotients.size(); ++i)
      os << (i ? "," : "; ") << cf.quotients[i].get_str();
    os << "]\n";
    emit(json, cf_json(cf), os.str());
    return kExitOk;
  }

  if (c_cfq->parsed()) {
    QuadraticNumber x = periodic_cf_quadratic(parse_int_list(quotients_str));
    CFWord cf = cf_of_quadratic(x, 12);
    ojson j;
    j["c2"] = x.c2.get_str();
    j["c1"] = x.c1.get_str();
    j["c0"] = x.c0.get_str();
    j["root_lo"] = rational_str(x.lo);
    j["root_hi"] = rational_str(x.hi);
    j["expansion"] = cf_json(cf);
    std::ostringstream os;
    os << x.c2.get_str() << " X^2 + " << x.c1.get_str() << " X + "
       << x.c0.get_str() << "\nroot in [" << rational_str(x.lo) << ", "
       << rational_str(x.hi) << "]\n";
    emit(json, j, os.str());
    return kExitOk;
  }

  if (c_cfl->parsed()) {
    std::vector<QuadraticLadderRecord> recs =
        quadratic_ladder(load_sequence(input).as_morphic(), n_max);
    ojson arr = ojson::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : recs) {
      ojson j;
      j["n"] = r.n;
      j["s_n"] = r.s_n;
      j["t_n"] = r.t_n;
      j["height"] = r.height.get_str();
      j["height_ok"] = r.height_ok;
      j["approx_ok"] = r.approx_ok;
      j["exponent_ratio"] = rational_str(r.exponent_ratio);
      j["degenerate"] = r.degenerate;
      arr.push_back(j);
      ok = ok && r.height_ok && r.approx_ok;
      os << "n=" << r.n << " H=" << r.height.get_str()
         << " height=" << (r.height_ok ? "ok" : "FAIL")
         << " approx=" << (r.approx_ok ? "ok" : "FAIL")
         << " ratio=" << rational_str(r.exponent_ratio)
         << (r.degenerate ? " degenerate" : "") << "\n";
    }
    emit(json, arr, os.str());
    return ok ? kExitOk : kExitCertFailed;
  }

  if (c_ld2->parsed()) {
    CFWord alpha{alpha_a0, parse_int_list(alpha_str)};
    CFWord xi{xi_a0, parse_int_list(xi_str)};
    mpz_class Mq(mq_str);
    SeparationResult res = lemma_dist2_check(alpha, xi, Mq);
    ojson j;
    j["n"] = res.n;
    j["bound"] = rational_to_json(res.bound);
    j["distance"] = rational_to_json(res.distance);
    j["holds"] = res.holds;
    std::ostringstream os;
    os << "n=" << res.n << " bound " << rational_str(res.bound) << " "
       << (res.holds ? "holds" : "FAILS") << "\n";
    emit(json, j, os.str());
    return res.holds ? kExitOk : kExitCertFailed;
  }

  if (c_bc->parsed()) {
    PisotCertificate cert =
        classify_pisot_salem(parse_int_list(minpoly_str), tol);
    const char* name = cert.classification == BetaClass::Pisot ? "PISOT"
                       : cert.classification == BetaClass::Salem
                           ? "SALEM"
                       : cert.classification == BetaClass::Neither
                           ? "NEITHER"
                           : "BOUNDARY_UNRESOLVED";
    ojson j;
    j["classification"] = name;
    ojson mods = ojson::array();
    for (const auto& [lo2, hi2] : cert.conjugate_moduli) {
      ojson m;
      m["lo"] = lo2;
      m["hi"] = hi2;
      mods.push_back(m);
    }
    j["conjugate_moduli"] = mods;
    j["tolerance"] = cert.tolerance;
    emit(json, j, std::string(name) + "\n");
    return kExitOk;
  }

  if (c_be->parsed()) {
    count = apply_depth_cap(count);
    FieldPtr field = make_field(parse_int_list(minpoly_str));
    FieldElement x =
        FieldElement::from_rational(field, parse_rational(x_str));
    Word w = greedy_beta_expansion(x, count);
    ojson j;
    j["digits"] = word_str(w);
    emit(json, j, word_str(w) + "\n");
    return kExitOk;
  }

  if (c_bl->parsed()) {
    FieldPtr field = make_field(parse_int_list(minpoly_str));
    BetaLadderReport rep =
        beta_ladder(load_sequence(input).as_morphic(), field, n_max,
                    parse_rational(epsilon_str));
    ojson j;
    j["d"] = rep.d;
    j["epsilon"] = rational_str(rep.epsilon);
    ojson arr = ojson::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : rep.records) {
      ojson rj;
      rj["n"] = r.n;
      rj["height"] = r.height.get_str();
      rj["err_lo"] = rational_to_json(r.err_lo);
      rj["err_hi"] = rational_to_json(r.err_hi);
      rj["h_ok"] = r.h_ok;
      rj["degenerate"] = r.degenerate;
      arr.push_back(rj);
      ok = ok && r.h_ok;
      os << "n=" << r.n << " H=" << r.height.get_str() << " h="
         << (r.h_ok ? "ok" : "FAIL") << (r.degenerate ? " degenerate" : "")
         << "\n";
    }
    j["records"] = arr;
    j["baker"] = rep.baker.conclusion;
    os << rep.baker.conclusion << "\n";
    emit(json, j, os.str());
    return ok ? kExitOk : kExitCertFailed;
  }

  if (c_ldp->parsed()) {
    FieldPtr field = make_field(parse_int_list(minpoly_str));
    unsigned bmax =
        static_cast<unsigned>(field->beta_floor().get_ui()) + 1;
    AlphabetPtr dal = digit_alphabet(bmax);
    Word U = Word::parse(dal, u_str), V = Word::parse(dal, v_str);
    Word stream_word = Word::parse(dal, digits_str);
    DigitFn stream = [w = std::make_shared<Word>(stream_word)](
                         std::size_t n) -> unsigned {
      if (n == 0) throw std::invalid_argument("digits are 1-based");
      if (n > w->size()) return 0;  // finite expansion, zero tail
      return static_cast<unsigned>(std::stoul(w->token(n - 1)));
    };
    BetaSeparation res = lemma_dist_prime_check(U, V, field, stream, j_arg);
    ojson j;
    j["bound_lo"] = rational_to_json(res.bound_lo);
    j["bound_hi"] = rational_to_json(res.bound_hi);
    j["holds"] = res.holds;
    std::ostringstream os;
    os << "bound in [" << rational_str(res.bound_lo) << ", "
       << rational_str(res.bound_hi) << "] "
       << (res.holds ? "holds" : "FAILS") << "\n";
    emit(json, j, os.str());
    return res.holds ? kExitOk : kExitCertFailed;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
