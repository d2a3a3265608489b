// Line-oriented on-disk formats.
//
// Graph files:   '#' starts a comment; optional header "graph <name>";
//                "v <id> [label]" declares a vertex, "e <id> <id> [label]"
//                an edge.
// Weight files:  "vlabel <label> <weight>", "elabel <label> <weight>",
//                "default <weight>" (sets both defaults). Weights are
//                decimal rationals ("2", "0.25") or fractions ("1/3").
#pragma once

#include <string>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

LabeledGraph parse_graph(const std::string& text);
LabeledGraph load_graph(const std::string& path);

/// Canonical form: header (when the name is nonempty), vertices ascending,
/// edges ascending. parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const LabeledGraph& g);

WeightScheme parse_weight_scheme(const std::string& text);
WeightScheme load_weight_scheme(const std::string& path);

}  // namespace bbpmcs
