#ifndef AUTOREAL_TEST_HELPERS_HPP
#define AUTOREAL_TEST_HELPERS_HPP

#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "autoreal/automaton.hpp"
#include "autoreal/beta.hpp"
#include "autoreal/cobham.hpp"
#include "autoreal/digits.hpp"
#include "autoreal/json_io.hpp"
#include "autoreal/rational.hpp"
#include "autoreal/words.hpp"

namespace testutil {

using namespace autoreal;

inline std::string data_path(const std::string& name) {
  return std::string(AUTOREAL_DATA_DIR) + "/" + name;
}

inline DFAO load_dfao(const std::string& name) {
  return dfao_from_json(load_json_file(data_path(name)));
}

inline MorphicRepr load_morphic(const std::string& name) {
  return morphic_from_json(load_json_file(data_path(name)));
}

// Brute-force kernel counting: breadth-first search over decimation
// pairs (i, j), distinguishing subsequences a_{k^i n + j} by their
// first prefix_len terms. Independent of the minimization path.
inline std::size_t kernel_oracle(const DFAO& a, std::size_t prefix_len) {
  struct Node {
    unsigned i;
    mpz_class j;
  };
  std::set<std::vector<uint32_t>> seen;
  std::deque<Node> queue;
  queue.push_back({0, 0});
  std::size_t count = 0;
  while (!queue.empty()) {
    Node nd = queue.front();
    queue.pop_front();
    mpz_class ki = pow_z(static_cast<unsigned long>(a.k), nd.i);
    std::vector<uint32_t> key;
    key.reserve(prefix_len);
    for (std::size_t n = 0; n < prefix_len; ++n)
      key.push_back(eval_index(a, ki * static_cast<unsigned long>(n) + nd.j));
    if (!seen.insert(std::move(key)).second) continue;
    ++count;
    for (unsigned t = 0; t < a.k; ++t)
      queue.push_back({nd.i + 1, nd.j + t * ki});
  }
  return count;
}

// Random 2-automaton with <= 5 states whose padded evaluation is
// repairable (kernel analysis accepts it).
inline DFAO random_dfao(std::mt19937& rng) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> nstates(1, 5);
    std::size_t n = nstates(rng);
    std::uniform_int_distribution<std::size_t> st(0, n - 1);
    DFAO a;
    a.k = 2;
    a.convention = ReadOrder::LsbFirst;
    a.output_alphabet = binary_alphabet();
    for (std::size_t i = 0; i < n; ++i) {
      a.states.push_back("s" + std::to_string(i));
      a.delta.push_back({st(rng), st(rng)});
      a.output.push_back(static_cast<uint32_t>(rng() & 1));
    }
    a.start = 0;
    try {
      normalize_zero_invariance(a);
    } catch (const std::exception&) {
      continue;
    }
    return a;
  }
}

// Direct definition: 1 iff the binary expansion of n has no block of
// consecutive 0's of odd length.
inline unsigned baum_sweet_def(unsigned long n) {
  if (n == 0) return 1;
  unsigned run = 0;
  while (n) {
    if (n & 1) {
      if (run % 2) return 0;
      run = 0;
    } else {
      ++run;
    }
    n >>= 1;
  }
  return 1;
}

inline FieldPtr golden_field() {
  return make_field({mpz_class(-1), mpz_class(-1), mpz_class(1)});
}

// beta^e as a field element.
inline FieldElement beta_pow(const FieldPtr& f, std::size_t e) {
  FieldElement r = FieldElement::from_rational(f, 1);
  FieldElement b = FieldElement::beta(f);
  for (std::size_t i = 0; i < e; ++i) r = r * b;
  return r;
}

}  // namespace testutil

#endif
