#include "autoreal/cobham.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autoreal {

void MorphicRepr::validate() const {
  if (!(*sigma.source() == *sigma.target()))
    throw std::invalid_argument("MorphicRepr: sigma must be an endomorphism");
  if (!sigma.uniform() || *sigma.uniform() != k)
    throw std::invalid_argument("MorphicRepr: sigma must be k-uniform");
  if (!phi.is_coding())
    throw std::invalid_argument("MorphicRepr: phi must be a coding");
  if (!(*phi.source() == *sigma.source()))
    throw std::invalid_argument("MorphicRepr: phi source mismatch");
  if (start >= sigma.source()->size())
    throw std::invalid_argument("MorphicRepr: start outside alphabet");
  const Word& im = sigma.image(start);
  if (im.empty() || im[0] != start)
    throw std::invalid_argument("MorphicRepr: sigma not prolongable at start");
}

Word MorphicRepr::internal_prefix(std::size_t n) const {
  return fixed_point_prefix(sigma, start, n);
}

Word MorphicRepr::output_prefix(std::size_t n) const {
  return apply_morphism(phi, internal_prefix(n));
}

MorphicRepr to_morphic(const DFAO& a_in) {
  DFAO a = a_in;
  a.validate();
  if (a.convention == ReadOrder::LsbFirst) a = reverse_reading(a);

  // Cobham's construction needs delta(q0, 0) = q0 in the MSB-first
  // machine; otherwise a fresh start state absorbing leading zeros is
  // added, with output matching the n = 0 evaluation.
  if (a.delta[a.start][0] != a.start) {
    DFAO b = a;
    std::size_t fresh = b.states.size();
    std::string name = "s";
    while (std::find(b.states.begin(), b.states.end(), name) != b.states.end())
      name += "'";
    b.states.push_back(name);
    std::vector<std::size_t> row(b.k);
    row[0] = fresh;
    for (unsigned d = 1; d < b.k; ++d) row[d] = b.delta[a.start][d];
    b.delta.push_back(row);
    b.output.push_back(b.output[b.delta[a.start][0]]);
    b.start = fresh;
    a = std::move(b);
  }

  // Restrict to states reachable from the (possibly repaired) start.
  std::vector<std::size_t> reach = reachable_states(a);
  std::vector<std::size_t> renum(a.states.size(), 0);
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    renum[reach[i]] = i;
    letters.push_back(a.states[reach[i]]);
  }
  AlphabetPtr internal = make_alphabet(letters);

  std::vector<Word> sigma_images, phi_images;
  for (std::size_t q : reach) {
    std::vector<uint32_t> im;
    for (unsigned d = 0; d < a.k; ++d)
      im.push_back(static_cast<uint32_t>(renum[a.delta[q][d]]));
    sigma_images.emplace_back(internal, std::move(im));
    phi_images.emplace_back(a.output_alphabet,
                            std::vector<uint32_t>{a.output[q]});
  }
  MorphicRepr m{Morphism(internal, internal, std::move(sigma_images)),
                Morphism(internal, a.output_alphabet, std::move(phi_images)),
                static_cast<uint32_t>(renum[a.start]), a.k};
  m.validate();
  return m;
}

DFAO to_automaton(const MorphicRepr& m) {
  m.validate();
  DFAO a;
  a.k = m.k;
  a.convention = ReadOrder::MsbFirst;
  a.states = m.sigma.source()->letters();
  a.start = m.start;
  a.output_alphabet = m.phi.target();
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    const Word& im = m.sigma.image(static_cast<uint32_t>(q));
    std::vector<std::size_t> row;
    for (std::size_t d = 0; d < m.k; ++d) row.push_back(im[d]);
    a.delta.push_back(std::move(row));
    a.output.push_back(m.phi.image(static_cast<uint32_t>(q))[0]);
  }
  a.validate();
  return a;
}

std::size_t internal_alphabet_size(const MorphicRepr& m) {
  m.validate();
  // Letters occurring in the fixed point = closure of {start} under
  // "letters of the sigma-image".
  std::set<uint32_t> seen{m.start};
  std::vector<uint32_t> stack{m.start};
  while (!stack.empty()) {
    uint32_t q = stack.back();
    stack.pop_back();
    for (uint32_t l : m.sigma.image(q).letters())
      if (seen.insert(l).second) stack.push_back(l);
  }
  return seen.size();
}

StructuralHypotheses structural_hypotheses(const MorphicRepr& m,
                                           std::size_t scan_depth) {
  m.validate();
  StructuralHypotheses h;
  h.scan_depth = scan_depth;
  Word w = m.internal_prefix(scan_depth);
  h.internal_overlap = find_overlap_prefix(w);
  for (std::size_t t = 1; t < w.size(); ++t) {
    if (w[t] == m.start) {
      h.first_letter_repeats = w.substr(1, t - 1);
      break;
    }
  }
  return h;
}

}  // namespace autoreal
