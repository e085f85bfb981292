#pragma once

#include <string>

#include <json.hpp>

#include "cliquegame/graph.hpp"

namespace cliquegame {

using Json = nlohmann::ordered_json;

// Graph document:   { "n": int, "edges": [[u, v], ...] }   with u < v, no duplicates.
// Witness document: graph document plus "h_edges" (same rules) and "k".
//
// Readers throw InputError whose message names the offending location, e.g.
// "edges[3]: expected u < v, got [5, 2]".

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json witness_to_json(const PartialKTreeWitness& w);
/// Also validates the witness invariants (subset, chordal h, clique bound).
PartialKTreeWitness witness_from_json(const Json& doc);

/// Parses text into a document, reporting syntax errors with their byte offset.
Json parse_json_text(const std::string& text);

Json ordering_to_json(const LinearOrdering& ordering);

}  // namespace cliquegame
