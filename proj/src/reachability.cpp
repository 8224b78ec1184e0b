#include "gcn/reachability.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

#include "gcn/error.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

namespace {

// Bounded BFS that reuses its buffers across calls.
class BoundedBfs {
 public:
  explicit BoundedBfs(int n) : dist_(static_cast<std::size_t>(n), -1) {}

  // Visits every vertex reachable from `source` through vertices accepted by
  // `allowed`, within `depth` steps. Calls `visit(w, d)` once per vertex.
  template <class Allowed, class Visit>
  void run(const Graph& g, Vertex source, int depth, Allowed&& allowed, Visit&& visit) {
    for (Vertex v : queue_) dist_[v] = -1;
    queue_.clear();
    queue_.push_back(source);
    dist_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      visit(x, dist_[x]);
      if (dist_[x] >= depth) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist_[y] < 0 && allowed(y)) {
          dist_[y] = dist_[x] + 1;
          queue_.push_back(y);
        }
      }
    }
  }

 private:
  std::vector<int> dist_;
  std::vector<Vertex> queue_;
};

void check_order(const Graph& g, const LinearOrder& L) {
  if (L.size() != g.order()) throw InputError("order size does not match graph");
}

// Strong reach of v: BFS through vertices L-greater than v collecting the
// L-smaller endpoints hit within the radius.
template <class Hit>
void strong_search(const Graph& g, const LinearOrder& L, Vertex v, int r, BoundedBfs& bfs, std::vector<int>& stamp,
                   int token, Hit&& hit) {
  const int pv = L.position(v);
  hit(v);
  if (r == 0) return;
  bfs.run(
      g, v, r - 1, [&](Vertex y) { return L.position(y) > pv; },
      [&](Vertex x, int) {
        for (Vertex y : g.neighbors(x)) {
          if (L.position(y) < pv && stamp[y] != token) {
            stamp[y] = token;
            hit(y);
          }
        }
      });
}

}  // namespace

std::vector<Vertex> wreach(const Graph& g, const LinearOrder& L, Vertex v, Radius radius) {
  check_order(g, L);
  g.require_vertex(v);
  const int r = radius.resolve(g.order());
  auto ball = distances(g, v, r);
  std::vector<Vertex> out;
  BoundedBfs bfs(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (ball[u] < 0 || L.position(u) > L.position(v)) continue;
    const int pu = L.position(u);
    bool found = false;
    bfs.run(
        g, u, r, [&](Vertex y) { return L.position(y) >= pu; },
        [&](Vertex x, int) { found = found || x == v; });
    if (found) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> sreach(const Graph& g, const LinearOrder& L, Vertex v, Radius radius) {
  check_order(g, L);
  g.require_vertex(v);
  const int r = radius.resolve(g.order());
  BoundedBfs bfs(g.order());
  std::vector<int> stamp(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> out;
  strong_search(g, L, v, r, bfs, stamp, 0, [&](Vertex u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> reach_sizes(const Graph& g, const LinearOrder& L, Radius radius, Mode mode) {
  check_order(g, L);
  const int n = g.order();
  const int r = radius.resolve(n);
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  BoundedBfs bfs(n);
  if (mode == Mode::Weak) {
    // u is weakly reachable from exactly the vertices within distance r of u
    // in the subgraph induced by {w : w >=_L u}.
    for (Vertex u = 0; u < n; ++u) {
      const int pu = L.position(u);
      bfs.run(
          g, u, r, [&](Vertex y) { return L.position(y) >= pu; }, [&](Vertex x, int) { ++sizes[x]; });
    }
  } else {
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
      strong_search(g, L, v, r, bfs, stamp, v, [&](Vertex) { ++sizes[v]; });
    }
  }
  return sizes;
}

int cost_of_order(const Graph& g, const LinearOrder& L, Radius r, Mode mode) {
  auto sizes = reach_sizes(g, L, r, mode);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
  explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
    all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  }

  Mask neighbourhood(Mask s) const {
    Mask out = 0;
    for (Mask b = s; b; b &= b - 1) out |= adj[std::countr_zero(b)];
    return out;
  }

  // Vertices within `depth` steps of `seed` inside `allowed` (seed included).
  Mask ball(Mask seed, Mask allowed, int depth) const {
    Mask reached = seed;
    Mask frontier = seed;
    for (int d = 0; d < depth && frontier; ++d) {
      frontier = neighbourhood(frontier) & allowed & ~reached;
      reached |= frontier;
    }
    return reached;
  }

  int n;
  std::vector<Mask> adj;
  Mask all;
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int r, Mode mode) : mg_(g), r_(r), mode_(mode), counts_(static_cast<std::size_t>(g.order()), 0) {}

  ExactResult run(const LinearOrder& seed_order, int seed_value) {
    best_ = seed_value + 1;
    best_order_ = std::vector<Vertex>(seed_order.sequence().begin(), seed_order.sequence().end());
    prefix_.clear();
    dfs(0, 0);
    return {best_, LinearOrder(best_order_)};
  }

 private:
  int strong_cost(Vertex v, Mask placed) const {
    const Mask bit = Mask{1} << v;
    const Mask inner = mg_.all & ~placed & ~bit;
    Mask frontier = bit;
    Mask seen = bit;
    Mask hits = 0;
    for (int step = 1; step <= r_ && frontier; ++step) {
      Mask nb = mg_.neighbourhood(frontier);
      hits |= nb & placed;
      frontier = nb & inner & ~seen;
      seen |= frontier;
    }
    return 1 + std::popcount(hits);
  }

  void dfs(Mask placed, int current) {
    if (static_cast<int>(prefix_.size()) == mg_.n) {
      best_ = current;
      best_order_ = prefix_;
      return;
    }
    if (mode_ == Mode::Strong) {
      // The completion problem depends only on the placed set.
      auto [it, inserted] = memo_.try_emplace(placed, current);
      if (!inserted) {
        if (it->second <= current) return;
        it->second = current;
      }
    }
    for (Vertex v = 0; v < mg_.n; ++v) {
      const Mask bit = Mask{1} << v;
      if (placed & bit) continue;
      if (mode_ == Mode::Strong) {
        int next = std::max(current, strong_cost(v, placed));
        if (next >= best_) continue;
        prefix_.push_back(v);
        dfs(placed | bit, next);
        prefix_.pop_back();
      } else {
        const Mask ball = mg_.ball(bit, mg_.all & ~placed, r_);
        int next = current;
        for (Mask b = ball; b; b &= b - 1) next = std::max(next, ++counts_[std::countr_zero(b)]);
        if (next < best_) {
          prefix_.push_back(v);
          dfs(placed | bit, next);
          prefix_.pop_back();
        }
        for (Mask b = ball; b; b &= b - 1) --counts_[std::countr_zero(b)];
      }
    }
  }

  MaskGraph mg_;
  int r_;
  Mode mode_;
  std::vector<int> counts_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> best_order_;
  int best_ = 0;
  std::unordered_map<Mask, int> memo_;
};

void require_capacity(const Graph& g, int cap, const char* what) {
  const int hard = std::min(cap, 64);
  if (g.order() > hard) {
    throw CapacityError(std::string(what) + ": graph has " + std::to_string(g.order()) + " vertices, limit is " +
                        std::to_string(hard));
  }
}

}  // namespace

ExactResult exact_gcn(const Graph& g, Radius radius, Mode mode, ExactOptions options) {
  require_capacity(g, options.max_vertices, "exact_gcn");
  if (g.order() == 0) return {0, LinearOrder{}};
  const int r = radius.resolve(g.order());
  auto seed = degeneracy_order(g).order;
  int seed_value = cost_of_order(g, seed, r, mode);
  return ExactSearch(g, r, mode).run(seed, seed_value);
}

FillInGraph fill_in(const Graph& g, const LinearOrder& L) {
  check_order(g, L);
  const int n = g.order();
  std::vector<std::vector<std::uint8_t>> adj(static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<Edge> added;
  std::vector<Vertex> lower;
  for (int pos = n - 1; pos >= 0; --pos) {
    Vertex v = L.at(pos);
    lower.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (adj[v][u] && L.position(u) < pos) lower.push_back(u);
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (std::size_t j = i + 1; j < lower.size(); ++j) {
        Vertex a = lower[i], b = lower[j];
        if (!adj[a][b]) {
          adj[a][b] = adj[b][a] = 1;
          added.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
  }
  std::sort(added.begin(), added.end());
  Graph filled = g.with_edges(added);
  return {g, std::move(added), std::move(filled)};
}

int elimination_width(const Graph& g, const LinearOrder& L) {
  if (g.order() == 0) return -1;
  auto f = fill_in(g, L);
  // G_L is chordal with L reversed as a perfect elimination order, so its
  // largest clique is some vertex together with its L-smaller neighbours.
  int width = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    int lower = 0;
    for (Vertex u : f.filled.neighbors(v)) lower += L.less(u, v) ? 1 : 0;
    width = std::max(width, lower);
  }
  return width;
}

int treewidth_exact(const Graph& g, WidthOptions options) {
  require_capacity(g, std::min(options.max_vertices, 30), "treewidth_exact");
  const int n = g.order();
  if (n == 0) return -1;
  MaskGraph mg(g);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> best(states, std::numeric_limits<std::uint8_t>::max());
  best[0] = 0;
  for (Mask placed = 0; placed < states; ++placed) {
    const int base = best[placed];
    if (base == std::numeric_limits<std::uint8_t>::max()) continue;
    for (Vertex v = 0; v < n; ++v) {
      const Mask bit = Mask{1} << v;
      if (placed & bit) continue;
      // Earlier vertices reachable from v through later ones.
      const Mask region = mg.ball(bit, mg.all & ~placed, n);
      const int back = std::popcount(mg.neighbourhood(region) & placed);
      const int width = std::max(base, back);
      auto& slot = best[placed | bit];
      if (width < slot) slot = static_cast<std::uint8_t>(width);
    }
  }
  return best[states - 1];
}

namespace {

class TreeDepth {
 public:
  explicit TreeDepth(const Graph& g) : mg_(g) {}

  int solve(Mask s) {
    if (!s) return 0;
    if ((s & (s - 1)) == 0) return 1;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const Mask lowest = s & (~s + 1);
    const Mask comp = mg_.ball(lowest, s, mg_.n);
    int result;
    if (comp != s) {
      result = std::max(solve(comp), solve(s & ~comp));
    } else {
      result = std::numeric_limits<int>::max();
      for (Mask b = s; b; b &= b - 1) {
        result = std::min(result, 1 + solve(s & ~(b & (~b + 1))));
      }
    }
    memo_.emplace(s, result);
    return result;
  }

 private:
  MaskGraph mg_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

int treedepth_exact(const Graph& g, WidthOptions options) {
  require_capacity(g, options.max_vertices, "treedepth_exact");
  if (g.order() == 0) return 0;
  MaskGraph mg(g);
  return TreeDepth(g).solve(mg.all);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

BinomialCheck check_binomial_bound(const Graph& g, const LinearOrder& L, int r) {
  if (r < 0) throw InputError("negative radius");
  BinomialCheck out;
  out.elimination_width = std::max(0, elimination_width(g, L));
  out.bound = binomial(r + out.elimination_width, out.elimination_width);
  out.max_wreach = cost_of_order(g, L, r, Mode::Weak);
  out.holds = static_cast<std::uint64_t>(out.max_wreach) <= out.bound;
  return out;
}

}  // namespace gcn
