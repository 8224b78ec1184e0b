#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph and LinearOrder types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"

namespace oracle {

using gcn::Edge;
using gcn::Graph;
using gcn::LinearOrder;
using gcn::Vertex;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Floyd restricted to the vertices with alive[v] set.
inline std::vector<std::vector<int>> floyd_induced(const Graph& g, const std::vector<bool>& alive) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    d[v][v] = 0;
    for (int u : g.neighbors(v)) {
      if (alive[u]) d[v][u] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Components of G[keep], each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<bool>& keep) {
  UnionFind uf(g.order());
  for (auto [u, v] : g.edges()) {
    if (keep[u] && keep[v]) uf.unite(u, v);
  }
  std::vector<std::vector<Vertex>> by_root(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (keep[v]) by_root[uf.find(v)].push_back(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_set(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::vector<bool> keep(g.order(), false);
  for (int v : s) keep[v] = true;
  return components(g, keep).size() == 1;
}

/// Calls visit(path) for every simple path starting at v with at most r edges.
inline void for_each_path(const Graph& g, Vertex v, int r, const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{v};
  std::vector<bool> on(g.order(), false);
  on[v] = true;
  std::function<void()> rec = [&] {
    visit(path);
    if (static_cast<int>(path.size()) - 1 == r) return;
    for (int w : g.neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = true;
      path.push_back(w);
      rec();
      path.pop_back();
      on[w] = false;
    }
  };
  rec();
}

/// WReach by path enumeration: the far endpoint is the L-minimum of the path.
inline std::set<Vertex> wreach(const Graph& g, const LinearOrder& L, Vertex v, int r) {
  std::set<Vertex> out;
  for_each_path(g, v, r, [&](const std::vector<Vertex>& p) {
    const Vertex u = p.back();
    for (Vertex x : p) {
      if (L.less(x, u)) return;
    }
    out.insert(u);
  });
  return out;
}

/// SReach by path enumeration: u <=_L v and every inner vertex >_L v.
inline std::set<Vertex> sreach(const Graph& g, const LinearOrder& L, Vertex v, int r) {
  std::set<Vertex> out;
  for_each_path(g, v, r, [&](const std::vector<Vertex>& p) {
    const Vertex u = p.back();
    if (L.less(v, u)) return;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (!L.less(v, p[i])) return;
    }
    out.insert(u);
  });
  return out;
}

inline int cost(const Graph& g, const LinearOrder& L, int r, bool strong) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    const auto s = strong ? sreach(g, L, v, r) : wreach(g, L, v, r);
    best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

/// Minimum cost over every permutation (n <= 8).
inline int exact_by_permutations(const Graph& g, int r, bool strong) {
  std::vector<Vertex> seq(g.order());
  std::iota(seq.begin(), seq.end(), 0);
  int best = kInf;
  do {
    best = std::min(best, cost(g, LinearOrder(seq), r, strong));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return g.order() == 0 ? 0 : best;
}

/// Fill-in edges by the path characterisation: u, v adjacent in G_L iff
/// some u-v path has all inner vertices L-greater than both ends.
inline std::set<Edge> fill_edges(const Graph& g, const LinearOrder& L) {
  std::set<Edge> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<bool> keep(n, false);
      for (int x = 0; x < n; ++x) keep[x] = L.less(u, x) && L.less(v, x);
      keep[u] = keep[v] = true;
      // Paths of length >= 1 inside keep joining u and v.
      std::vector<bool> seen(n, false);
      std::vector<int> stack{u};
      seen[u] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) break;
                for (int y : g.neighbors(x)) {
          if (keep[y] && !seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      if (seen[v] && !g.has_edge(u, v)) out.insert({u, v});
    }
  }
  return out;
}

inline int clique_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = a + 1; b < n && ok; ++b) {
        if ((mask >> b & 1u) && !g.has_edge(a, b)) ok = false;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

/// Elimination width via the path characterisation (n <= 16).
inline int elimination_width(const Graph& g, const LinearOrder& L) {
  if (g.order() == 0) return -1;
  auto extra = fill_edges(g, L);
  std::vector<Edge> e(extra.begin(), extra.end());
  return clique_number(g.with_edges(e)) - 1;
}

/// Tree-width as the minimum elimination width over all permutations.
inline int treewidth(const Graph& g) {
  if (g.order() == 0) return -1;
  std::vector<Vertex> seq(g.order());
  std::iota(seq.begin(), seq.end(), 0);
  int best = kInf;
  do {
    best = std::min(best, elimination_width(g, LinearOrder(seq)));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

/// Tree-depth by plain recursion on vertex subsets (n <= 8).
inline int treedepth(const Graph& g) {
  std::function<int(std::vector<bool>)> td = [&](std::vector<bool> keep) -> int {
    auto comps = components(g, keep);
    if (comps.empty()) return 0;
    int worst = 0;
    for (const auto& c : comps) {
      if (c.size() == 1) {
        worst = std::max(worst, 1);
        continue;
      }
      int best = kInf;
      for (int v : c) {
        std::vector<bool> sub(g.order(), false);
        for (int x : c) sub[x] = x != v;
        best = std::min(best, 1 + td(sub));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return td(std::vector<bool>(g.order(), true));
}

/// Exhaustive minor test: tries every map host vertex -> {unused, 0..k-1}.
inline bool has_minor(const Graph& host, const Graph& minor) {
  const int n = host.order();
  const int k = minor.order();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> label(n, 0);  // 0 unused, i+1 -> branch set i
  while (true) {
    std::vector<std::vector<Vertex>> sets(k);
    for (int v = 0; v < n; ++v) {
      if (label[v] > 0) sets[label[v] - 1].push_back(v);
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = connected_set(host, sets[i]);
    for (auto [a, b] : minor.edges()) {
      if (!ok) break;
      bool joined = false;
      for (int x : sets[a]) {
        for (int y : sets[b]) joined = joined || host.has_edge(x, y);
      }
      ok = joined;
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++label[i] > k) label[i++] = 0;
    if (i == n) return false;
  }
}

/// Naive LexBFS with explicit label vectors compared lexicographically; ties
/// go to the smallest id. Returns the visit order of the root's component.
inline std::vector<Vertex> lexbfs(const Graph& g, Vertex root) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<Vertex> out;
  std::vector<bool> reached(n, false);
  reached[root] = true;
  for (int step = n; step > 0; --step) {
    Vertex pick = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || !reached[v]) continue;
      if (pick < 0 || label[v] > label[pick]) pick = v;
    }
    if (pick < 0) break;
    done[pick] = true;
    out.push_back(pick);
    for (int w : g.neighbors(pick)) {
      if (!done[w]) {
        label[w].push_back(step);
        reached[w] = true;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hand-rolled random generators.

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

inline Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (u(rng) < p) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

inline Graph random_connected_graph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int v = 1; v < n; ++v) e.emplace_back(pick(rng, 0, v - 1), v);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (u(rng) < p && std::find(e.begin(), e.end(), Edge{a, b}) == e.end()) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

inline Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(pick(rng, 0, v - 1), v);
  return Graph(n, e);
}

inline LinearOrder random_order(Rng& rng, int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return LinearOrder(seq);
}

}  // namespace oracle
