#include "gcn/graph.hpp"

#include <algorithm>
#include <string>

#include "gcn/error.hpp"

namespace gcn {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("parallel edge");
    }
  }
  m_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(order(), all);
}

void Graph::require_vertex(Vertex v) const {
  if (!contains(v)) throw InputError("unknown vertex " + std::to_string(v));
}

std::vector<std::uint8_t> complement_mask(const Graph& g, std::span<const Vertex> removed) {
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : removed) {
    g.require_vertex(v);
    alive[v] = 0;
  }
  return alive;
}

Path Tree::root_path(Vertex v) const {
  Path p;
  if (v < 0 || static_cast<std::size_t>(v) >= depth.size() || depth[v] < 0) return p;
  for (Vertex x = v; x != -1; x = parent[x]) p.push_back(x);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace gcn
