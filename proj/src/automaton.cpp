#include "autoreal/automaton.hpp"

#include "autoreal/rational.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>

namespace autoreal {

void DFAO::validate() const {
  if (k < 2) throw std::invalid_argument("DFAO: base < 2");
  if (states.empty()) throw std::invalid_argument("DFAO: no states");
  if (delta.size() != states.size() || output.size() != states.size())
    throw std::invalid_argument("DFAO: delta/output size mismatch");
  if (start >= states.size()) throw std::invalid_argument("DFAO: bad start");
  if (!output_alphabet) throw std::invalid_argument("DFAO: no output alphabet");
  for (const auto& row : delta) {
    if (row.size() != k) throw std::invalid_argument("DFAO: delta not total");
    for (std::size_t t : row)
      if (t >= states.size())
        throw std::invalid_argument("DFAO: transition out of range");
  }
  for (uint32_t o : output)
    if (o >= output_alphabet->size())
      throw std::invalid_argument("DFAO: output letter out of range");
}

std::size_t DFAO::state_index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end())
    throw std::invalid_argument("DFAO: unknown state " + name);
  return static_cast<std::size_t>(it - states.begin());
}

std::vector<unsigned> lsb_digits(const mpz_class& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("lsb_digits: negative");
  if (n == 0) return {0};
  std::vector<unsigned> digits;
  mpz_class m = n;
  while (m > 0) {
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), k);
    digits.push_back(static_cast<unsigned>(r.get_ui()));
    m = q;
  }
  return digits;
}

uint32_t eval_index(const DFAO& a, const mpz_class& n) {
  std::vector<unsigned> digits = lsb_digits(n, a.k);
  std::size_t q = a.start;
  if (a.convention == ReadOrder::LsbFirst) {
    for (unsigned d : digits) q = a.delta[q][d];
  } else {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
      q = a.delta[q][*it];
  }
  return a.output[q];
}

std::string eval(const DFAO& a, const mpz_class& n) {
  return a.output_alphabet->letter(eval_index(a, n));
}

Word sequence_prefix(const DFAO& a, std::size_t n_terms) {
  std::vector<uint32_t> letters;
  letters.reserve(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n)
    letters.push_back(eval_index(a, mpz_class(static_cast<unsigned long>(n))));
  return Word(a.output_alphabet, std::move(letters));
}

std::vector<std::size_t> reachable_states(const DFAO& a) {
  std::vector<bool> seen(a.states.size(), false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{a.start};
  seen[a.start] = true;
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (unsigned d = 0; d < a.k; ++d) {
      std::size_t t = a.delta[q][d];
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

namespace {

// Moore partition refinement over the reachable states. Returns class
// ids indexed by state (SIZE_MAX for unreachable states); class ids are
// dense and ordered by first occurrence along the BFS order.
std::vector<std::size_t> moore_classes(const DFAO& a,
                                       const std::vector<std::size_t>& reach,
                                       std::size_t* n_classes_out) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(a.states.size(), kNone);
  // Initial partition: output letter.
  {
    std::map<uint32_t, std::size_t> ids;
    std::vector<std::size_t> renum(a.states.size(), kNone);
    std::size_t next = 0;
    for (std::size_t q : reach) {
      auto [it, fresh] = ids.emplace(a.output[q], next);
      if (fresh) ++next;
      renum[q] = it->second;
    }
    cls = renum;
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> renum(a.states.size(), kNone);
    std::size_t next = 0;
    for (std::size_t q : reach) {
      std::vector<std::size_t> sig;
      sig.reserve(a.k + 1);
      sig.push_back(cls[q]);
      for (unsigned d = 0; d < a.k; ++d) sig.push_back(cls[a.delta[q][d]]);
      auto [it, fresh] = ids.emplace(std::move(sig), next);
      if (fresh) ++next;
      renum[q] = it->second;
    }
    bool changed = false;
    for (std::size_t q : reach)
      if (renum[q] != cls[q]) changed = true;
    cls = renum;
    if (!changed) {
      if (n_classes_out) *n_classes_out = next;
      return cls;
    }
  }
}

}  // namespace

DFAO minimize(const DFAO& a) {
  a.validate();
  std::vector<std::size_t> reach = reachable_states(a);
  std::size_t n_classes = 0;
  std::vector<std::size_t> cls = moore_classes(a, reach, &n_classes);

  DFAO b;
  b.k = a.k;
  b.convention = a.convention;
  b.output_alphabet = a.output_alphabet;
  b.states.assign(n_classes, "");
  b.delta.assign(n_classes, std::vector<std::size_t>(a.k, 0));
  b.output.assign(n_classes, 0);
  std::vector<bool> done(n_classes, false);
  for (std::size_t q : reach) {
    std::size_t c = cls[q];
    if (done[c]) continue;
    done[c] = true;
    b.states[c] = a.states[q];
    b.output[c] = a.output[q];
    for (unsigned d = 0; d < a.k; ++d) b.delta[c][d] = cls[a.delta[q][d]];
  }
  b.start = cls[a.start];
  b.validate();
  return b;
}

DFAO reverse_reading(const DFAO& a, std::size_t state_guard,
                     std::size_t explore_cap) {
  a.validate();
  if (a.states.size() > state_guard)
    throw std::invalid_argument("reverse_reading: state guard exceeded");

  const std::size_t n = a.states.size();
  using Fn = std::vector<std::size_t>;  // composed transition function
  std::map<Fn, std::size_t> ids;
  std::vector<Fn> fns;
  Fn identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  ids.emplace(identity, 0);
  fns.push_back(identity);

  DFAO b;
  b.k = a.k;
  b.convention = a.convention == ReadOrder::LsbFirst ? ReadOrder::MsbFirst
                                                     : ReadOrder::LsbFirst;
  b.output_alphabet = a.output_alphabet;
  b.start = 0;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (fns.size() > explore_cap)
      throw std::invalid_argument("reverse_reading: exploration cap exceeded");
    const Fn f = fns[i];
    b.delta.emplace_back(a.k, 0);
    for (unsigned d = 0; d < a.k; ++d) {
      Fn g(n);
      for (std::size_t q = 0; q < n; ++q) g[q] = f[a.delta[q][d]];
      auto [it, fresh] = ids.emplace(g, fns.size());
      if (fresh) fns.push_back(std::move(g));
      b.delta[i][d] = it->second;
    }
    b.states.push_back("r" + std::to_string(i));
    b.output.push_back(a.output[f[a.start]]);
  }
  b.validate();
  return minimize(b);
}

DFAO normalize_zero_invariance(const DFAO& a) {
  a.validate();
  if (a.convention != ReadOrder::LsbFirst)
    throw std::invalid_argument(
        "normalize_zero_invariance: LSB-first automaton required");
  std::vector<std::size_t> reach = reachable_states(a);

  bool stable = true;
  for (std::size_t q : reach)
    if (a.output[a.delta[q][0]] != a.output[q]) stable = false;
  if (stable) return a;

  // States whose outputs canonical evaluation can observe: targets of a
  // nonzero digit, plus delta(q0, 0) for n = 0.
  std::vector<bool> pinned(a.states.size(), false);
  pinned[a.delta[a.start][0]] = true;
  for (std::size_t q : reach)
    for (unsigned d = 1; d < a.k; ++d) pinned[a.delta[q][d]] = true;

  // Zero-invariance forces equal outputs along zero-transitions; merge
  // the equality components and repair free (unpinned) outputs.
  std::vector<std::size_t> comp(a.states.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t q : reach) {
    std::size_t r1 = find(q), r2 = find(a.delta[q][0]);
    if (r1 != r2) comp[std::max(r1, r2)] = std::min(r1, r2);
  }

  DFAO b = a;
  std::vector<std::optional<uint32_t>> comp_out(a.states.size());
  for (std::size_t q : reach) {
    if (!pinned[q]) continue;
    std::size_t c = find(q);
    if (comp_out[c] && *comp_out[c] != a.output[q])
      throw std::invalid_argument(
          "normalize_zero_invariance: padded and canonical evaluations "
          "conflict; cannot repair");
    comp_out[c] = a.output[q];
  }
  for (std::size_t q : reach) {
    std::size_t c = find(q);
    if (comp_out[c]) b.output[q] = *comp_out[c];
  }
  // Re-check; the repair is exact when it exists.
  for (std::size_t q : reach)
    if (b.output[b.delta[q][0]] != b.output[q])
      throw std::logic_error("normalize_zero_invariance: repair failed");
  return b;
}

KernelResult kernel_size(const DFAO& a_in) {
  DFAO a = a_in;
  a.validate();
  if (a.convention == ReadOrder::MsbFirst) a = reverse_reading(a);
  a = normalize_zero_invariance(a);

  std::vector<std::size_t> reach = reachable_states(a);
  std::size_t n_classes = 0;
  std::vector<std::size_t> cls = moore_classes(a, reach, &n_classes);

  KernelResult res;
  res.m = n_classes;
  for (std::size_t q : reach)
    res.class_of_state[a.states[q]] = cls[q];

  // Minimal (i, j) lexicographically per class: walk the i LSB digits
  // of j from the start state.
  std::vector<bool> found(n_classes, false);
  std::size_t remaining = n_classes;
  res.representatives.assign(n_classes, {0, 0});
  std::size_t walk_budget = 1 << 22;
  for (unsigned i = 0; remaining > 0; ++i) {
    mpz_class ki = pow_z(static_cast<unsigned long>(a.k), i);
    if (!ki.fits_ulong_p() || ki.get_ui() > walk_budget)
      throw std::runtime_error("kernel_size: representative search budget");
    unsigned long kiu = ki.get_ui();
    for (unsigned long j = 0; j < kiu && remaining > 0; ++j) {
      std::size_t q = a.start;
      unsigned long jj = j;
      for (unsigned t = 0; t < i; ++t) {
        q = a.delta[q][jj % a.k];
        jj /= a.k;
      }
      std::size_t c = cls[q];
      if (!found[c]) {
        found[c] = true;
        --remaining;
        res.representatives[c] = {i, mpz_class(j)};
      }
    }
    walk_budget -= std::min<std::size_t>(walk_budget, kiu);
  }
  return res;
}

}  // namespace autoreal
