#pragma once

#include <string>

#include "subsum/graph.hpp"

namespace subsum {

/**
 * JSON graph format: {"n": <int>, "edges": [[u,v], ...], "labels": [...]}
 * with u < v and edges sorted lexicographically, so equal graphs serialize
 * identically. labels (element coordinate tuples) appear when the graph
 * carries them.
 */
std::string graph_to_json(const Graph& gr);

/**
 * Parses the JSON graph format. labels are optional; when present they must
 * have one integer tuple per vertex. Malformed documents raise ParseError,
 * out-of-range edges InvalidParameterError, and n beyond the vertex cap
 * ResourceLimitError.
 */
Graph graph_from_json(const std::string& text);

/**
 * DOT export: one subgraph cluster per connected component, labeled with the
 * component's profile; vertices labeled with their element tuple (or index
 * when unlabeled).
 */
std::string graph_to_dot(const Graph& gr, const std::string& name = "subsum");

}  // namespace subsum
