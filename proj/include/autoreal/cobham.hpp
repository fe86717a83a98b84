#ifndef AUTOREAL_COBHAM_HPP
#define AUTOREAL_COBHAM_HPP

#include <cstdint>
#include <optional>

#include "autoreal/automaton.hpp"
#include "autoreal/words.hpp"

namespace autoreal {

/// Cobham 5-tuple: a = phi(sigma^inf(start)) with sigma k-uniform and
/// phi a coding of the internal alphabet into the output alphabet.
struct MorphicRepr {
  Morphism sigma;
  Morphism phi;
  uint32_t start = 0;
  unsigned k = 2;

  void validate() const;
  // First n letters of the internal sequence sigma^inf(start).
  Word internal_prefix(std::size_t n) const;
  // First n letters of the output sequence phi(sigma^inf(start)).
  Word output_prefix(std::size_t n) const;
};

MorphicRepr to_morphic(const DFAO& a);
DFAO to_automaton(const MorphicRepr& m);

// |I| restricted to letters occurring in sigma^inf(start).
std::size_t internal_alphabet_size(const MorphicRepr& m);

struct StructuralHypotheses {
  std::optional<Word> internal_overlap;       // W with W W W[0] a prefix
  std::optional<Word> first_letter_repeats;   // U with start U start a prefix
  std::size_t scan_depth = 0;                 // absence means "not found <= depth"
};

StructuralHypotheses structural_hypotheses(const MorphicRepr& m,
                                           std::size_t scan_depth = 1 << 14);

}  // namespace autoreal

#endif
