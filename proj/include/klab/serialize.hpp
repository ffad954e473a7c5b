#ifndef KLAB_SERIALIZE_HPP
#define KLAB_SERIALIZE_HPP

#include "klab/graph.hpp"
#include "klab/rational.hpp"
#include "klab/spectral.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace klab {

// {"n_vertices": int, "edges": [[u, v], ...], "labels": {"0": "1", ...}}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j); // throws InvalidInput

// {"exact": [[num, den, multiplicity], ...], "cubic": {"e1": .., "e2": .., "e3": ..} | null,
//  "floating": [values...] | null}
nlohmann::json spectrum_to_json(const Spectrum& s);

/// {"num": p, "den": q}; numbers that overflow int64 are written as strings.
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json integer_to_json(const BigInt& z);

/// "2,3" -> {2, 3}. Empty text gives the empty set.
std::set<int> parse_index_list(const std::string& text);

} // namespace klab

#endif // KLAB_SERIALIZE_HPP
