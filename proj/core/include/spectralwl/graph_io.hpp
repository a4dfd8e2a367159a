#pragma once

#include <optional>
#include <string>
#include <variant>

#include "spectralwl/graph.hpp"

namespace spectralwl {

enum class GraphFormat { edge_list, json_graph };

// Edge-list grammar: one "<u> <v>" pair per line, '#' starts a comment line,
// optional leading "n=<count>" header declares the node count (required for
// trailing isolated nodes). JSON grammar: {"n": int, "edges": [[u,v], ...]}
// with "n" optional.
Graph parse_graph(const std::string& text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

// The JSON graph format also accepts {"n": int, "matrix": [[...], ...]} for
// direct symmetric-matrix input. parse_input_text sniffs the payload: JSON
// object → graph or matrix depending on fields, anything else → edge list.
using GraphOrMatrix = std::variant<Graph, SymmetricMatrix>;
GraphOrMatrix parse_input_text(const std::string& text);

// A corpus in one file: a JSON array of graph objects.
std::vector<Graph> parse_graph_array(const std::string& text);

}  // namespace spectralwl
