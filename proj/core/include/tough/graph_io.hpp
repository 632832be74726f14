#pragma once

#include <string>
#include <string_view>

#include "tough/graph.hpp"

namespace tough {

/// Parses "u v" lines, optionally preceded by a header line "n <count>".
/// Blank lines and lines starting with '#' are skipped. Without a header the
/// vertex count is one more than the largest id seen.
/// Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);

/// Header line "n <count>" followed by one "u v" line per edge.
std::string emit_edge_list(const Graph& g);

/// Decodes one graph6 line; a leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError on a bad length or byte.
Graph parse_graph6(std::string_view line);

/// Headerless graph6 encoding.
std::string emit_graph6(const Graph& g);

/// Undirected DOT with vertex ids as labels.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace tough
