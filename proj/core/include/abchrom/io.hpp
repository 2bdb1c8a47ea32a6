#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abchrom/coloring.hpp"
#include "abchrom/graph.hpp"

namespace abchrom {

enum class GraphFormat {
  edge_list,  ///< "n" on the first line, then one 0-based "u v" pair per line
  dimacs,     ///< "c" comments, "p edge n m", then 1-based "e u v" lines
};

/// Throws ParseError (with a 1-based line number) on malformed input and on a DIMACS edge count
/// that disagrees with the "p" line; InvalidGraph errors from validation are passed through.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Edges are written in the graph's stored order, u < v on every line.
/// `comments` are emitted as DIMACS "c" lines and ignored for the edge-list format.
std::string serialize_graph(const Graph& g, GraphFormat format, const std::vector<std::string>& comments = {});

/// Two lines: k, then the n colors separated by single spaces.
Coloring parse_coloring(std::string_view text);
std::string serialize_coloring(const Coloring& c);

/// Graphviz rendering. Labels (if non-empty) name the vertices; a coloring adds "c=<color>" to each label.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {}, const Coloring* coloring = nullptr);

/// Picks a format from a file name: ".dimacs", ".col" and ".clq" mean DIMACS, anything else the edge list.
GraphFormat format_from_path(std::string_view path);

}  // namespace abchrom
