#ifndef AUTOREAL_JSON_IO_HPP
#define AUTOREAL_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "autoreal/automaton.hpp"
#include "autoreal/cobham.hpp"
#include "autoreal/words.hpp"

namespace autoreal {

using ojson = nlohmann::ordered_json;

// Schemas (words as concatenated tokens when every token is one
// character, arrays of tokens otherwise):
//   DFAO       {"k", "states", "delta", "q0", "output", "convention"}
//   Morphism   {"source", "target", "images", "uniform"?}
//   MorphicRepr{"k", "sigma", "phi", "start"}
DFAO dfao_from_json(const ojson& j);
ojson dfao_to_json(const DFAO& a);

Morphism morphism_from_json(const ojson& j);
ojson morphism_to_json(const Morphism& m);

MorphicRepr morphic_from_json(const ojson& j);
ojson morphic_to_json(const MorphicRepr& m);

// File helpers; errors surface as std::invalid_argument.
ojson load_json_file(const std::string& path);

mpq_class rational_from_json(const ojson& j);  // "p/q" string or {num, den}
ojson rational_to_json(const mpq_class& q);    // {"num": "...", "den": "..."}

}  // namespace autoreal

#endif
