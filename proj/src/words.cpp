#include "autoreal/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "autoreal/rational.hpp"

namespace autoreal {

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  // An empty alphabet is permitted; only the empty word exists over it.
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].empty())
      throw std::invalid_argument("Alphabet: empty letter token");
    if (!index_.emplace(letters_[i], i).second)
      throw std::invalid_argument("Alphabet: duplicate letter " + letters_[i]);
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr digit_alphabet(unsigned b) {
  if (b < 2) throw std::invalid_argument("digit_alphabet: base < 2");
  std::vector<std::string> letters;
  letters.reserve(b);
  for (unsigned i = 0; i < b; ++i) letters.push_back(std::to_string(i));
  return make_alphabet(std::move(letters));
}

AlphabetPtr binary_alphabet() {
  static AlphabetPtr a = digit_alphabet(2);
  return a;
}

Word::Word() : alphabet_(make_alphabet({})) {}

Word::Word(AlphabetPtr alphabet, std::vector<uint32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw std::invalid_argument("Word: null alphabet");
  for (uint32_t l : letters_)
    if (l >= alphabet_->size())
      throw std::invalid_argument("Word: letter outside alphabet");
}

Word Word::parse(AlphabetPtr alphabet, std::string_view s) {
  std::vector<uint32_t> letters;
  letters.reserve(s.size());
  for (char c : s) {
    auto idx = alphabet->index_of(std::string_view(&c, 1));
    if (!idx)
      throw std::invalid_argument(std::string("Word::parse: letter '") + c +
                                  "' outside alphabet");
    letters.push_back(static_cast<uint32_t>(*idx));
  }
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::from_tokens(AlphabetPtr alphabet,
                       const std::vector<std::string>& tokens) {
  std::vector<uint32_t> letters;
  letters.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto idx = alphabet->index_of(t);
    if (!idx)
      throw std::invalid_argument("Word::from_tokens: letter '" + t +
                                  "' outside alphabet");
    letters.push_back(static_cast<uint32_t>(*idx));
  }
  return Word(std::move(alphabet), std::move(letters));
}

const std::string& Word::token(std::size_t i) const {
  return alphabet_->letter(letters_.at(i));
}

Word Word::prefix(std::size_t n) const {
  return Word(alphabet_, std::vector<uint32_t>(
                             letters_.begin(),
                             letters_.begin() + std::min(n, letters_.size())));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<uint32_t>(letters_.begin() + pos,
                                               letters_.begin() + pos + len));
}

Word Word::operator+(const Word& o) const {
  if (!(*alphabet_ == *o.alphabet_))
    throw std::invalid_argument("Word::operator+: alphabet mismatch");
  std::vector<uint32_t> letters = letters_;
  letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
  return Word(alphabet_, std::move(letters));
}

bool Word::operator==(const Word& o) const {
  return *alphabet_ == *o.alphabet_ && letters_ == o.letters_;
}

std::string Word::str() const {
  std::string s;
  for (uint32_t l : letters_) s += alphabet_->letter(l);
  return s;
}

void Word::push_back(uint32_t letter) {
  if (letter >= alphabet_->size())
    throw std::invalid_argument("Word::push_back: letter outside alphabet");
  letters_.push_back(letter);
}

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target,
                   std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw std::invalid_argument("Morphism: one image per source letter");
  for (const auto& im : images_)
    if (!(*im.alphabet() == *target_))
      throw std::invalid_argument("Morphism: image over wrong alphabet");
  bool same = true;
  for (const auto& im : images_)
    if (im.size() != images_[0].size()) same = false;
  if (same) uniform_ = images_[0].size();
}

bool Morphism::is_coding() const { return uniform_ && *uniform_ == 1; }

bool Morphism::non_erasing() const {
  for (const auto& im : images_)
    if (im.empty()) return false;
  return true;
}

Word apply_morphism(const Morphism& m, const Word& w) {
  if (!(*w.alphabet() == *m.source()))
    throw std::invalid_argument("apply_morphism: word outside source alphabet");
  std::vector<uint32_t> out;
  for (uint32_t l : w.letters()) {
    const Word& im = m.image(l);
    out.insert(out.end(), im.letters().begin(), im.letters().end());
  }
  return Word(m.target(), std::move(out));
}

Word fixed_point_prefix(const Morphism& m, uint32_t start,
                        std::size_t n_letters) {
  if (!(*m.source() == *m.target()))
    throw std::invalid_argument("fixed_point_prefix: endomorphism required");
  if (start >= m.source()->size())
    throw std::invalid_argument("fixed_point_prefix: start outside alphabet");
  const Word& im = m.image(start);
  if (im.empty() || im[0] != start || im.size() < 2 || !m.non_erasing())
    throw std::invalid_argument("fixed_point_prefix: morphism not prolongable");

  std::vector<uint32_t> w = {start};
  std::size_t expanded = 0;  // w[0..expanded) already replaced by images
  while (w.size() < n_letters) {
    std::vector<uint32_t> next;
    next.reserve(std::max<std::size_t>(2 * w.size(), n_letters));
    for (uint32_t l : w) {
      const auto& img = m.image(l).letters();
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= n_letters) break;
    }
    if (next.size() <= w.size())
      throw std::invalid_argument("fixed_point_prefix: no growth");
    w = std::move(next);
    (void)expanded;
  }
  w.resize(n_letters);
  return Word(m.source(), std::move(w));
}

Word fractional_power(const Word& w, const mpq_class& x) {
  if (w.empty()) throw std::invalid_argument("fractional_power: empty word");
  if (x < 1) throw std::invalid_argument("fractional_power: x < 1");
  mpz_class fl = x.get_num() / x.get_den();
  mpq_class frac = x - mpq_class(fl);
  // ceil(frac * |w|)
  mpq_class t = frac * mpq_class(static_cast<unsigned long>(w.size()));
  mpz_class extra;
  mpz_cdiv_q(extra.get_mpz_t(), t.get_num().get_mpz_t(),
             t.get_den().get_mpz_t());

  if (!fl.fits_ulong_p())
    throw std::invalid_argument("fractional_power: exponent too large");
  unsigned long reps = fl.get_ui();
  std::vector<uint32_t> out;
  out.reserve(reps * w.size() + extra.get_ui());
  for (unsigned long i = 0; i < reps; ++i)
    out.insert(out.end(), w.letters().begin(), w.letters().end());
  out.insert(out.end(), w.letters().begin(),
             w.letters().begin() + extra.get_ui());
  return Word(w.alphabet(), std::move(out));
}

std::optional<Word> find_overlap_prefix(const Word& w) {
  for (std::size_t len = 1; 2 * len + 1 <= w.size(); ++len) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i)
      if (w[i] != w[len + i]) ok = false;
    if (ok && w[2 * len] == w[0]) return w.prefix(len);
  }
  return std::nullopt;
}

SecondOccurrence find_second_occurrence_prefix(const Word& w, std::size_t d) {
  if (w.size() < d + 1)
    throw std::invalid_argument("find_second_occurrence_prefix: prefix too short");
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i] == w[j]) {
        return SecondOccurrence{w.prefix(i), w[i], w.substr(i + 1, j - i - 1)};
      }
    }
  }
  throw std::invalid_argument(
      "find_second_occurrence_prefix: no repeated letter in prefix of length "
      "d+1 (alphabet larger than d?)");
}

RepetitionReport repetition_report(const Word& w, unsigned k, unsigned m) {
  if (w.size() < 4)
    throw std::invalid_argument("repetition_report: prefix too short");
  RepetitionReport rep;
  rep.prefix_length = w.size();
  const std::size_t L = w.size();
  const mpz_class limit = pow_z(static_cast<unsigned long>(k), m);
  const mpq_class limit_q(limit);

  // Prefix powers U V^s: for each (|U|, |V|) extend the period greedily.
  struct Hit {
    std::size_t u, v, e;
  };
  std::vector<Hit> best_hits;
  std::size_t best_num = 0, best_den = 1;  // max of (u+e)/(u+v)
  const auto* raw = w.letters().data();
  for (std::size_t u = 0; u + 1 <= L / 2; ++u) {
    for (std::size_t v = 1; u + v <= L / 2; ++v) {
      // w[0..u+v) = U V is a prefix by construction; extend the period.
      std::size_t e = v;
      while (u + e < L && raw[u + e] == raw[u + e - v]) ++e;
      unsigned long long lhs = 1ull * (u + e) * best_den;
      unsigned long long rhs = 1ull * best_num * (u + v);
      if (lhs > rhs) {
        best_num = u + e;
        best_den = u + v;
        best_hits.clear();
      }
      if (lhs >= rhs && best_hits.size() < 16) best_hits.push_back({u, v, e});
    }
  }
  rep.max_ratio = mpq_class(static_cast<unsigned long>(best_num),
                            static_cast<unsigned long>(best_den));
  rep.max_ratio.canonicalize();
  for (const auto& h : best_hits) {
    mpq_class s(static_cast<unsigned long>(h.e),
                static_cast<unsigned long>(h.v));
    s.canonicalize();
    rep.witnesses.push_back({h.u, h.v, s});
  }
  rep.ratio_violation = rep.max_ratio >= limit_q;

  // Admissible triples (h, p, l): minimal h per mismatch position l is
  // the binding representative for the l < h*k^m condition.
  bool limit_small = limit.fits_ulong_p();
  unsigned long limit_ul = limit_small ? limit.get_ui() : 0;
  std::size_t tbest_num = 0, tbest_den = 1;
  for (std::size_t p = 1; p < L; ++p) {
    std::size_t run_start = p;  // start of the current match run
    for (std::size_t n = p; n < L; ++n) {
      if (raw[n] == raw[n - p]) continue;
      std::size_t l = n;
      std::size_t h = run_start;  // >= p always
      run_start = n + 1;
      // Each h' in [h, l] yields an admissible triple (h', p, l).
      rep.triple_count += l - h + 1;
      if (limit_small && 1ull * h * limit_ul <= l) rep.triple_violation = true;
      unsigned long long lhs = 1ull * l * tbest_den;
      unsigned long long rhs = 1ull * tbest_num * h;
      if (lhs > rhs) {
        tbest_num = l;
        tbest_den = h;
        rep.admissible_triples.clear();
      }
      if (lhs >= rhs && rep.admissible_triples.size() < 16)
        rep.admissible_triples.push_back({h, p, l});
    }
  }
  rep.max_triple_ratio = mpq_class(static_cast<unsigned long>(tbest_num),
                                   static_cast<unsigned long>(tbest_den));
  rep.max_triple_ratio.canonicalize();
  return rep;
}

bool looks_eventually_periodic(const Word& w) {
  const std::size_t L = w.size();
  if (L < 8) return false;
  const std::size_t cutoff = L / 2;
  for (std::size_t p = 1; p <= L / 4; ++p) {
    bool ok = true;
    for (std::size_t n = cutoff; n + p < L && ok; ++n)
      if (w[n] != w[n + p]) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace autoreal
