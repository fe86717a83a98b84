#ifndef AUTOREAL_WORDS_HPP
#define AUTOREAL_WORDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autoreal {

/// Ordered finite set of opaque letter tokens.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& letter(std::size_t i) const { return letters_.at(i); }
  std::optional<std::size_t> index_of(std::string_view token) const;
  const std::vector<std::string>& letters() const { return letters_; }
  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters);
// Letters "0", "1", ..., "b-1".
AlphabetPtr digit_alphabet(unsigned b);
AlphabetPtr binary_alphabet();

/// Finite word over a fixed alphabet; letters stored as indices.
class Word {
 public:
  Word();  // empty word over the empty alphabet
  explicit Word(AlphabetPtr alphabet, std::vector<uint32_t> letters = {});
  // Each character of `s` must be a letter token of the alphabet.
  static Word parse(AlphabetPtr alphabet, std::string_view s);
  static Word from_tokens(AlphabetPtr alphabet,
                          const std::vector<std::string>& tokens);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  uint32_t operator[](std::size_t i) const { return letters_[i]; }
  const std::string& token(std::size_t i) const;
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<uint32_t>& letters() const { return letters_; }

  Word prefix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t len) const;
  Word operator+(const Word& o) const;
  bool operator==(const Word& o) const;
  std::string str() const;

  void push_back(uint32_t letter);

 private:
  AlphabetPtr alphabet_;
  std::vector<uint32_t> letters_;
};

/// Monoid homomorphism given by letter images.
class Morphism {
 public:
  Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Word& image(uint32_t letter) const { return images_.at(letter); }
  // Image length when all images have equal length.
  std::optional<std::size_t> uniform() const { return uniform_; }
  bool is_coding() const;
  bool non_erasing() const;

 private:
  AlphabetPtr source_, target_;
  std::vector<Word> images_;
  std::optional<std::size_t> uniform_;
};

Word apply_morphism(const Morphism& m, const Word& w);

// First n_letters letters of the fixed point of m at `start`.
// Requires m(start) = start.W with W non-empty and m non-erasing.
Word fixed_point_prefix(const Morphism& m, uint32_t start,
                        std::size_t n_letters);

// W^floor(x) followed by the prefix of W of length ceil(frac(x)*|W|); x >= 1.
Word fractional_power(const Word& w, const mpq_class& x);

// Shortest non-empty W with W W a[0] a prefix of w.
std::optional<Word> find_overlap_prefix(const Word& w);

struct SecondOccurrence {
  Word U;
  uint32_t a;
  Word V;
};

// U a V a prefix of w with |U|+|V| <= d-1; ties broken by the smallest
// index of the second occurrence, then of the first.
SecondOccurrence find_second_occurrence_prefix(const Word& w, std::size_t d);

struct RepetitionWitness {
  std::size_t u_len, v_len;
  mpq_class s;  // exponent: |UV^s| = u_len + s * v_len
};

struct AdmissibleTriple {
  std::size_t h, p, l;
};

struct RepetitionReport {
  std::size_t prefix_length = 0;
  mpq_class max_ratio;  // sup |UV^s| / |UV| over prefix powers
  std::vector<RepetitionWitness> witnesses;
  bool ratio_violation = false;  // some ratio >= k^m
  // Triples with the maximal l/h among the minimal-h representatives
  // of each mismatch position (capped); see triple_count for scale.
  std::vector<AdmissibleTriple> admissible_triples;
  mpq_class max_triple_ratio;  // max l/h over all admissible triples
  std::size_t triple_count = 0;
  bool triple_violation = false;  // some triple with l >= h * k^m
};

RepetitionReport repetition_report(const Word& w_prefix, unsigned k,
                                   unsigned m);

// True when every letter of the scanned prefix from some cutoff on
// repeats with period p <= prefix/4; used as a pre-scan warning.
bool looks_eventually_periodic(const Word& w_prefix);

}  // namespace autoreal

#endif
