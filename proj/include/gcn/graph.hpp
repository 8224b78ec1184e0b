#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gcn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ordered vertex sequence. Consecutive entries are adjacent in whichever
/// host graph the path is stated for.
using Path = std::vector<Vertex>;

/// Finite simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Adjacency lists are kept sorted, so every traversal that walks neighbours
/// in list order breaks ties by smallest vertex id. Immutable after
/// construction; subgraphs are expressed as GraphView masks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }

  bool contains(Vertex v) const { return v >= 0 && v < order(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Same vertex set with `extra` edges added. Duplicates of existing edges
  /// are rejected.
  Graph with_edges(std::span<const Edge> extra) const;

  /// Throws InputError when v is not a vertex.
  void require_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Non-owning view of an induced subgraph: the host graph restricted to the
/// vertices whose mask entry is non-zero. The mask must outlive the view.
class GraphView {
 public:
  GraphView(const Graph& g) : g_(&g) {}  // NOLINT(google-explicit-constructor)
  GraphView(const Graph& g, std::span<const std::uint8_t> alive) : g_(&g), alive_(alive) {}

  const Graph& graph() const { return *g_; }
  int host_order() const { return g_->order(); }
  bool contains(Vertex v) const {
    return g_->contains(v) && (alive_.empty() || alive_[static_cast<std::size_t>(v)] != 0);
  }
  std::span<const Vertex> host_neighbors(Vertex v) const { return g_->neighbors(v); }
  bool is_full() const { return alive_.empty(); }

 private:
  const Graph* g_;
  std::span<const std::uint8_t> alive_;
};

/// Mask with 1 for every vertex of `g` not listed in `removed`.
std::vector<std::uint8_t> complement_mask(const Graph& g, std::span<const Vertex> removed);

/// Rooted spanning tree of the root's component.
struct Tree {
  Vertex root = -1;
  std::vector<Vertex> parent;  // -1 for the root and for unspanned vertices
  std::vector<int> depth;      // -1 for unspanned vertices
  std::vector<Vertex> order;   // discovery order, root first

  bool spans(Vertex v) const { return depth[static_cast<std::size_t>(v)] >= 0; }
  /// Tree path from the root down to v (root first).
  Path root_path(Vertex v) const;
};

}  // namespace gcn
