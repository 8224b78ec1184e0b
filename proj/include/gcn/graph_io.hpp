#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gcn/graph.hpp"

namespace gcn {

/// graph6 string for `g` (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws InputError on malformed input.
Graph from_graph6(std::string_view line);

/// Reads every non-empty line of a graph6 file.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Edge list text: one "u v" pair per line, 0-based; '#' starts a comment.
/// The vertex count is one more than the largest id unless a line
/// "n <count>" appears first (needed for trailing isolated vertices).
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

/// Loads a graph from `path`, detecting graph6 versus edge list by content.
Graph load_graph(const std::string& path);

}  // namespace gcn
