#pragma once

#include <json.hpp>
#include <string>

#include "normgraph/decode.hpp"
#include "normgraph/realization.hpp"

namespace normgraph::io {

using Json = nlohmann::ordered_json;

// Document layout:
//   alphabets:   {name: {"field": p, "dim": k} | {"cyclic": [m1, ...]}}
//   symbols:     [{id, alphabet}]
//   states:      [{id, alphabet, iso?}]   iso is a matrix over the alphabet
//   constraints: [{id, vars, generators}] rows concatenate coordinates in vars order
//   boundary:    [state ids]              optional
// Entries are canonical residues; anything out of range is rejected.
Json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);
std::string alphabet_name(const Alphabet& a);

Json to_json(const NormalRealization& r);
NormalRealization realization_from_json(const Json& j);

std::string serialize(const NormalRealization& r);
NormalRealization parse(const std::string& text);

NormalRealization load(const std::string& path);
void save(const NormalRealization& r, const std::string& path);
Json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

// {"symbol": [w0, w1, ...]} in Alphabet::index_of order. Weights are numbers
// or strings such as "9/10".
WeightMap<Rational> priors_exact(const Json& j);
WeightMap<double> priors_float(const Json& j);

Json weights_to_json(const WeightMap<Rational>& m);
Json weights_to_json(const WeightMap<double>& m);

std::string to_string(const Rational& q);

}  // namespace normgraph::io
