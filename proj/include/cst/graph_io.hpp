#pragma once

#include <iosfwd>
#include <string>

#include "cst/graph.hpp"

namespace cst {

/* Canonical edge-list text format: the first nonempty, non-comment line is
 * the vertex count n; every following line is "u v" with 0 <= u < v < n.
 * '#' starts a comment; duplicate edges are rejected. ParseError carries the
 * offending line number.
 */
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// Standard graph6 encoding (one graph per string, optional ">>graph6<<"
// header). Decoding is bit-exact per the public format description.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Auto-detection: an edge-list file starts with a bare integer line; graph6
// lines never do (their alphabet starts at '?'). Reads one graph.
Graph parse_graph_auto(std::istream& in);

} // namespace cst
