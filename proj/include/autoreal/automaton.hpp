#ifndef AUTOREAL_AUTOMATON_HPP
#define AUTOREAL_AUTOMATON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "autoreal/words.hpp"

namespace autoreal {

enum class ReadOrder { LsbFirst, MsbFirst };

/// Deterministic finite automaton with output over base-k digits.
struct DFAO {
  unsigned k = 2;
  std::vector<std::string> states;
  std::vector<std::vector<std::size_t>> delta;  // [state][digit] -> state
  std::size_t start = 0;
  AlphabetPtr output_alphabet;
  std::vector<uint32_t> output;  // [state] -> output letter index
  ReadOrder convention = ReadOrder::LsbFirst;

  void validate() const;
  std::size_t state_index(const std::string& name) const;
};

// Digits of n in base k, least significant first; n = 0 gives {0}.
std::vector<unsigned> lsb_digits(const mpz_class& n, unsigned k);

uint32_t eval_index(const DFAO& a, const mpz_class& n);
std::string eval(const DFAO& a, const mpz_class& n);
Word sequence_prefix(const DFAO& a, std::size_t n_terms);

// Reachable states (via digit words, start included), in BFS order.
std::vector<std::size_t> reachable_states(const DFAO& a);

DFAO minimize(const DFAO& a);

// Equivalent DFAO reading digits in the opposite order (transition
// function construction, minimized). Guarded: throws when the input has
// more than `state_guard` states or the construction explores more than
// `explore_cap` functions.
DFAO reverse_reading(const DFAO& a, std::size_t state_guard = 12,
                     std::size_t explore_cap = 1 << 18);

// Returns an equivalent LSB-first DFAO whose outputs are invariant under
// padding with most-significant zero digits. Already-invariant automata
// are returned unchanged; otherwise outputs never observed by canonical
// evaluation are repaired, and the automaton is rejected when canonical
// and padded evaluations genuinely conflict.
DFAO normalize_zero_invariance(const DFAO& a);

struct KernelResult {
  std::size_t m = 0;  // kernel cardinality
  // One minimal (i, j) per distinct kernel sequence (a_{k^i n + j}).
  std::vector<std::pair<unsigned, mpz_class>> representatives;
  std::map<std::string, std::size_t> class_of_state;
};

KernelResult kernel_size(const DFAO& a);

}  // namespace autoreal

#endif
