#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"

namespace gcn {

/// Vertices at distance <= r from v inside the view (v included), sorted.
/// Throws InputError if v is not a vertex of the view or r < 0.
std::vector<Vertex> closed_neighborhood(const GraphView& g, Vertex v, int r);

/// BFS distances from `source` inside the view, -1 where unreachable. When
/// `max_depth` >= 0 the search stops expanding at that depth.
std::vector<int> distances(const GraphView& g, Vertex source, int max_depth = -1);

/// Breadth-first tree of the root's component; neighbours are scanned in
/// ascending id order so ties go to the smallest id.
Tree bfs_tree(const GraphView& g, Vertex root);

/// Lexicographic breadth-first search from `root`, restricted to the root's
/// component. Among vertices with lexicographically largest label the
/// smallest id is chosen. The parent of w is its earliest discovered
/// neighbour, which sits one level above w.
Tree lex_bfs_tree(const GraphView& g, Vertex root);

/// True iff `p` is non-empty, repeats no vertex, stays inside the view and
/// consecutive entries are adjacent.
bool is_path(const GraphView& g, std::span<const Vertex> p);

/// True iff `p` is a shortest path between its endpoints inside the view.
/// Throws InputError if `p` is not a path of the view.
bool is_isometric_path(const GraphView& g, std::span<const Vertex> p);

/// Shortest path from `from` to `to` inside the view using BFS with
/// smallest-id tie-breaking; empty if `to` is unreachable.
Path shortest_path(const GraphView& g, Vertex from, Vertex to);

/// Connected components of the view, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const GraphView& g);
/// Connected components of `g` minus `removed`.
std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> removed);

/// True iff the vertex set induces a connected subgraph (empty sets are not).
bool is_connected_set(const Graph& g, std::span<const Vertex> vertices);

/// Quotient graph with one vertex per part; parts i and j are adjacent iff
/// some edge of `g` joins them. Parts must partition V(g) into connected sets.
Graph contract_parts(const Graph& g, std::span<const std::vector<Vertex>> parts);

struct DegeneracyResult {
  /// Reverse of the min-degree removal sequence: every vertex has at most
  /// `degeneracy` neighbours before it.
  LinearOrder order;
  int degeneracy = 0;
};

/// Repeated removal of a minimum-degree vertex (smallest id on ties).
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace gcn
