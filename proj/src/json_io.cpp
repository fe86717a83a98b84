#include "autoreal/json_io.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include "autoreal/rational.hpp"

namespace autoreal {

namespace {

bool all_single_char(const Alphabet& a) {
  for (const std::string& t : a.letters())
    if (t.size() != 1) return false;
  return true;
}

Word word_from_json(const AlphabetPtr& alpha, const ojson& j,
                    const std::string& what) {
  if (j.is_string()) {
    try {
      return Word::parse(alpha, j.get<std::string>());
    } catch (const std::exception& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  if (j.is_array()) {
    std::vector<std::string> tokens;
    for (const auto& t : j) tokens.push_back(t.get<std::string>());
    try {
      return Word::from_tokens(alpha, tokens);
    } catch (const std::exception& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  throw std::invalid_argument(what + ": expected string or array");
}

ojson word_to_json(const Word& w) {
  if (all_single_char(*w.alphabet())) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += w.token(i);
    return ojson(s);
  }
  ojson arr = ojson::array();
  for (std::size_t i = 0; i < w.size(); ++i) arr.push_back(w.token(i));
  return arr;
}

std::vector<std::string> string_list(const ojson& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + ": expected array");
  std::vector<std::string> out;
  for (const auto& t : j) out.push_back(t.get<std::string>());
  return out;
}

const ojson& field(const ojson& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

DFAO dfao_from_json(const ojson& j) {
  DFAO a;
  a.k = field(j, "k").get<unsigned>();
  a.states = string_list(field(j, "states"), "states");

  std::string conv = field(j, "convention").get<std::string>();
  if (conv == "LSB_FIRST")
    a.convention = ReadOrder::LsbFirst;
  else if (conv == "MSB_FIRST")
    a.convention = ReadOrder::MsbFirst;
  else
    throw std::invalid_argument("convention must be LSB_FIRST or MSB_FIRST");

  auto index_of = [&a](const std::string& name) {
    for (std::size_t i = 0; i < a.states.size(); ++i)
      if (a.states[i] == name) return i;
    throw std::invalid_argument("unknown state '" + name + "'");
  };
  a.start = index_of(field(j, "q0").get<std::string>());

  const ojson& delta = field(j, "delta");
  a.delta.assign(a.states.size(), {});
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    auto it = delta.find(a.states[q]);
    if (it == delta.end())
      throw std::invalid_argument("delta missing state '" + a.states[q] + "'");
    std::vector<std::string> row = string_list(*it, "delta row");
    if (row.size() != a.k)
      throw std::invalid_argument("delta row for '" + a.states[q] +
                                  "' must list k successors");
    for (const std::string& t : row) a.delta[q].push_back(index_of(t));
  }

  const ojson& output = field(j, "output");
  // Output alphabet: distinct output tokens in state order.
  std::vector<std::string> out_letters;
  std::vector<std::string> out_by_state(a.states.size());
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    auto it = output.find(a.states[q]);
    if (it == output.end())
      throw std::invalid_argument("output missing state '" + a.states[q] + "'");
    out_by_state[q] = it->get<std::string>();
    bool seen = false;
    for (const std::string& t : out_letters)
      if (t == out_by_state[q]) seen = true;
    if (!seen) out_letters.push_back(out_by_state[q]);
  }
  a.output_alphabet = make_alphabet(out_letters);
  for (std::size_t q = 0; q < a.states.size(); ++q)
    a.output.push_back(
        static_cast<uint32_t>(*a.output_alphabet->index_of(out_by_state[q])));
  a.validate();
  return a;
}

ojson dfao_to_json(const DFAO& a) {
  a.validate();
  ojson j;
  j["k"] = a.k;
  j["states"] = a.states;
  ojson delta = ojson::object();
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    ojson row = ojson::array();
    for (std::size_t t : a.delta[q]) row.push_back(a.states[t]);
    delta[a.states[q]] = row;
  }
  j["delta"] = delta;
  j["q0"] = a.states[a.start];
  ojson output = ojson::object();
  for (std::size_t q = 0; q < a.states.size(); ++q)
    output[a.states[q]] = a.output_alphabet->letter(a.output[q]);
  j["output"] = output;
  j["convention"] =
      a.convention == ReadOrder::LsbFirst ? "LSB_FIRST" : "MSB_FIRST";
  return j;
}

Morphism morphism_from_json(const ojson& j) {
  AlphabetPtr source = make_alphabet(string_list(field(j, "source"), "source"));
  AlphabetPtr target = make_alphabet(string_list(field(j, "target"), "target"));
  const ojson& images = field(j, "images");
  std::vector<Word> ims;
  for (const std::string& t : source->letters()) {
    auto it = images.find(t);
    if (it == images.end())
      throw std::invalid_argument("images missing letter '" + t + "'");
    ims.push_back(word_from_json(target, *it, "image of '" + t + "'"));
  }
  Morphism m(source, target, std::move(ims));
  if (auto it = j.find("uniform"); it != j.end()) {
    std::size_t u = it->get<std::size_t>();
    if (!m.uniform() || *m.uniform() != u)
      throw std::invalid_argument("declared uniform length does not match");
  }
  return m;
}

ojson morphism_to_json(const Morphism& m) {
  ojson j;
  j["source"] = m.source()->letters();
  j["target"] = m.target()->letters();
  ojson images = ojson::object();
  for (std::size_t i = 0; i < m.source()->size(); ++i)
    images[m.source()->letter(i)] =
        word_to_json(m.image(static_cast<uint32_t>(i)));
  j["images"] = images;
  if (m.uniform()) j["uniform"] = *m.uniform();
  return j;
}

MorphicRepr morphic_from_json(const ojson& j) {
  unsigned k = field(j, "k").get<unsigned>();

  // Compact form: sigma/phi as plain image maps; the internal alphabet
  // is the key order of "sigma", the output alphabet the letters used
  // in "phi" images (first-occurrence order).
  const ojson& sj = field(j, "sigma");
  const ojson& pj = field(j, "phi");
  std::optional<Morphism> sigma, phi;
  std::vector<std::string> internal_letters;
  if (sj.contains("source")) {
    sigma = morphism_from_json(sj);
    phi = morphism_from_json(pj);
  } else {
    for (auto it = sj.begin(); it != sj.end(); ++it)
      internal_letters.push_back(it.key());
    AlphabetPtr internal = make_alphabet(internal_letters);
    std::vector<Word> sims;
    for (const std::string& t : internal_letters)
      sims.push_back(word_from_json(internal, sj.at(t), "sigma(" + t + ")"));
    sigma = Morphism(internal, internal, std::move(sims));

    std::vector<std::string> out_letters;
    std::vector<std::string> phi_of(internal_letters.size());
    for (std::size_t i = 0; i < internal_letters.size(); ++i) {
      auto it = pj.find(internal_letters[i]);
      if (it == pj.end())
        throw std::invalid_argument("phi missing letter '" +
                                    internal_letters[i] + "'");
      phi_of[i] = it->get<std::string>();
      bool seen = false;
      for (const std::string& t : out_letters)
        if (t == phi_of[i]) seen = true;
      if (!seen) out_letters.push_back(phi_of[i]);
    }
    AlphabetPtr out = make_alphabet(out_letters);
    std::vector<Word> pims;
    for (const std::string& t : phi_of)
      pims.push_back(Word::from_tokens(out, {t}));
    phi = Morphism(internal, out, std::move(pims));
  }

  const std::string start = field(j, "start").get<std::string>();
  auto idx = sigma->source()->index_of(start);
  if (!idx) throw std::invalid_argument("start letter '" + start + "' unknown");
  MorphicRepr m{std::move(*sigma), std::move(*phi),
                static_cast<uint32_t>(*idx), k};
  m.validate();
  return m;
}

ojson morphic_to_json(const MorphicRepr& m) {
  m.validate();
  ojson j;
  j["k"] = m.k;
  ojson sigma = ojson::object(), phi = ojson::object();
  for (std::size_t i = 0; i < m.sigma.source()->size(); ++i) {
    const std::string& t = m.sigma.source()->letter(i);
    sigma[t] = word_to_json(m.sigma.image(static_cast<uint32_t>(i)));
    phi[t] = m.phi.image(static_cast<uint32_t>(i)).token(0);
  }
  j["sigma"] = sigma;
  j["phi"] = phi;
  j["start"] = m.sigma.source()->letter(m.start);
  return j;
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

mpq_class rational_from_json(const ojson& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_object())
    return parse_rational(field(j, "num").get<std::string>() + "/" +
                          field(j, "den").get<std::string>());
  throw std::invalid_argument("expected rational");
}

ojson rational_to_json(const mpq_class& q) {
  ojson j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

}  // namespace autoreal
