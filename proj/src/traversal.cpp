#include "gcn/traversal.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <set>
#include <string>

#include "gcn/error.hpp"

namespace gcn {

namespace {

void require_in_view(const GraphView& g, Vertex v) {
  if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
}

}  // namespace

std::vector<int> distances(const GraphView& g, Vertex source, int max_depth) {
  require_in_view(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.host_order()), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (max_depth >= 0 && dist[x] >= max_depth) continue;
    for (Vertex y : g.host_neighbors(x)) {
      if (dist[y] < 0 && g.contains(y)) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Vertex> closed_neighborhood(const GraphView& g, Vertex v, int r) {
  require_in_view(g, v);
  if (r < 0) throw InputError("negative radius");
  auto dist = distances(g, v, r);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.host_order(); ++u) {
    if (dist[u] >= 0) out.push_back(u);
  }
  return out;
}

Tree bfs_tree(const GraphView& g, Vertex root) {
  require_in_view(g, root);
  const auto n = static_cast<std::size_t>(g.host_order());
  Tree t{root, std::vector<Vertex>(n, -1), std::vector<int>(n, -1), {root}};
  t.depth[root] = 0;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    Vertex x = t.order[head];
    for (Vertex y : g.host_neighbors(x)) {
      if (t.depth[y] < 0 && g.contains(y)) {
        t.depth[y] = t.depth[x] + 1;
        t.parent[y] = x;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

Tree lex_bfs_tree(const GraphView& g, Vertex root) {
  require_in_view(g, root);
  const auto n = static_cast<std::size_t>(g.host_order());
  Tree t{root, std::vector<Vertex>(n, -1), std::vector<int>(n, -1), {}};

  // Partition refinement: classes are kept in decreasing label order; each
  // class is an ordered set so its smallest id is at begin().
  using Class = std::set<Vertex>;
  std::list<Class> classes;
  std::vector<std::list<Class>::iterator> class_of(n);
  std::vector<std::uint8_t> visited(n, 0);

  Tree reach = bfs_tree(g, root);
  Class rest;
  for (Vertex v : reach.order) {
    if (v != root) rest.insert(v);
  }
  classes.push_back(Class{root});
  class_of[root] = classes.begin();
  if (!rest.empty()) {
    classes.push_back(std::move(rest));
    auto it = std::prev(classes.end());
    for (Vertex v : *it) class_of[v] = it;
  }

  t.depth[root] = 0;
  std::vector<std::pair<std::list<Class>::iterator, std::list<Class>::iterator>> split;
  while (!classes.empty()) {
    auto front = classes.begin();
    Vertex pivot = *front->begin();
    front->erase(front->begin());
    if (front->empty()) classes.erase(front);
    visited[pivot] = 1;
    t.order.push_back(pivot);

    split.clear();
    for (Vertex w : g.host_neighbors(pivot)) {
      if (!g.contains(w) || visited[w]) continue;
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[pivot] + 1;
        t.parent[w] = pivot;
      }
      auto old_class = class_of[w];
      auto found = std::find_if(split.begin(), split.end(), [&](const auto& s) { return s.first == old_class; });
      std::list<Class>::iterator target;
      if (found == split.end()) {
        target = classes.insert(old_class, Class{});
        split.emplace_back(old_class, target);
      } else {
        target = found->second;
      }
      old_class->erase(w);
      target->insert(w);
      class_of[w] = target;
    }
    for (const auto& s : split) {
      if (s.first->empty()) classes.erase(s.first);
    }
  }
  return t;
}

bool is_path(const GraphView& g, std::span<const Vertex> p) {
  if (p.empty()) return false;
  std::vector<Vertex> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) return false;
    if (i > 0 && !g.graph().has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_isometric_path(const GraphView& g, std::span<const Vertex> p) {
  if (!is_path(g, p)) throw InputError("not a path of the graph");
  const int length = static_cast<int>(p.size()) - 1;
  auto dist = distances(g, p.front(), length);
  return dist[p.back()] == length;
}

Path shortest_path(const GraphView& g, Vertex from, Vertex to) {
  require_in_view(g, to);
  Tree t = bfs_tree(g, from);
  return t.root_path(to);
}

std::vector<std::vector<Vertex>> components(const GraphView& g) {
  const auto n = static_cast<std::size_t>(g.host_order());
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.host_order(); ++s) {
    if (seen[s] || !g.contains(s)) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex y : g.host_neighbors(comp[head])) {
        if (!seen[y] && g.contains(y)) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> removed) {
  auto alive = complement_mask(g, removed);
  return components(GraphView(g, alive));
}

bool is_connected_set(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) {
    g.require_vertex(v);
    alive[v] = 1;
  }
  auto dist = distances(GraphView(g, alive), vertices.front());
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return dist[v] >= 0; });
}

Graph contract_parts(const Graph& g, std::span<const std::vector<Vertex>> parts) {
  std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      g.require_vertex(v);
      if (part_of[v] != -1) throw InputError("parts overlap at vertex " + std::to_string(v));
      part_of[v] = static_cast<int>(i);
    }
    if (!is_connected_set(g, parts[i])) throw InputError("part " + std::to_string(i) + " is not connected");
  }
  if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end()) {
    throw InputError("parts do not cover every vertex");
  }
  std::set<Edge> quotient;
  for (auto [u, v] : g.edges()) {
    int a = part_of[u], b = part_of[v];
    if (a != b) quotient.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> edges(quotient.begin(), quotient.end());
  return Graph(static_cast<int>(parts.size()), edges);
}

DegeneracyResult degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> removal;
  int degeneracy = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    degeneracy = std::max(degeneracy, d);
    removed[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return {LinearOrder(std::move(removal)), degeneracy};
}

}  // namespace gcn
