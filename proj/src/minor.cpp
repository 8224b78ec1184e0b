#include "gcn/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "gcn/error.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

bool is_minor_model(const Graph& host, const Graph& minor, const MinorModel& model, std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (static_cast<int>(model.branch_sets.size()) != minor.order()) return fail("wrong number of branch sets");
  std::vector<int> owner(static_cast<std::size_t>(host.order()), -1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    const auto& set = model.branch_sets[i];
    if (set.empty()) return fail("empty branch set " + std::to_string(i));
    for (Vertex v : set) {
      if (!host.contains(v)) return fail("vertex out of range");
      if (owner[v] != -1) return fail("branch sets overlap at " + std::to_string(v));
      owner[v] = static_cast<int>(i);
    }
    if (!is_connected_set(host, set)) return fail("branch set " + std::to_string(i) + " not connected");
  }
  for (auto [a, b] : minor.edges()) {
    bool joined = false;
    for (Vertex x : model.branch_sets[a]) {
      for (Vertex y : host.neighbors(x)) {
        if (owner[y] == b) {
          joined = true;
          break;
        }
      }
      if (joined) break;
    }
    if (!joined) return fail("minor edge {" + std::to_string(a) + "," + std::to_string(b) + "} not realised");
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& minor) : n_(host.order()), k_(minor.order()), minor_edges_(minor.edges()) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : host.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
    // BFS order per component keeps partial branch sets close together.
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return host.degree(a) > host.degree(b); });
    for (Vertex s : by_degree) {
      if (seen[s]) continue;
      Tree t = bfs_tree(host, s);
      for (Vertex v : t.order) {
        seen[v] = 1;
        order_.push_back(v);
      }
    }
    // Labels c and d are twins when swapping them is an automorphism of the
    // minor; only the smallest empty label of a twin class may be opened.
    twin_rep_.assign(static_cast<std::size_t>(k_), 0);
    for (int c = 0; c < k_; ++c) {
      twin_rep_[c] = c;
      for (int d = 0; d < c; ++d) {
        if (twins(minor, c, d)) {
          twin_rep_[c] = twin_rep_[d];
          break;
        }
      }
    }
    sets_.assign(static_cast<std::size_t>(k_), 0);
  }

  std::optional<MinorModel> run() {
    Mask all = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    if (search(0, all)) {
      MinorModel model;
      for (Mask s : sets_) {
        std::vector<Vertex> set;
        for (Mask b = s; b; b &= b - 1) set.push_back(std::countr_zero(b));
        model.branch_sets.push_back(std::move(set));
      }
      return model;
    }
    return std::nullopt;
  }

 private:
  static bool twins(const Graph& m, int c, int d) {
    for (Vertex x = 0; x < m.order(); ++x) {
      if (x == c || x == d) continue;
      if (m.has_edge(c, x) != m.has_edge(d, x)) return false;
    }
    return true;
  }

  Mask neighbourhood(Mask s) const {
    Mask out = 0;
    for (Mask b = s; b; b &= b - 1) out |= adj_[std::countr_zero(b)];
    return out;
  }

  // Vertices reachable from `seed` inside `allowed`.
  Mask flood(Mask seed, Mask allowed) const {
    Mask reached = seed & allowed;
    Mask frontier = reached;
    while (frontier) {
      Mask next = neighbourhood(frontier) & allowed & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached;
  }

  bool feasible(Mask unassigned) const {
    int empty = 0;
    for (int c = 0; c < k_; ++c) {
      if (!sets_[c]) {
        ++empty;
        continue;
      }
      Mask lowest = sets_[c] & (~sets_[c] + 1);
      region_[c] = flood(lowest, sets_[c] | unassigned);
      if ((region_[c] & sets_[c]) != sets_[c]) return false;
    }
    if (empty > std::popcount(unassigned)) return false;
    for (auto [a, b] : minor_edges_) {
      if (!sets_[a] || !sets_[b]) continue;
      if (!(region_[a] & (region_[b] | neighbourhood(region_[b])))) return false;
    }
    return true;
  }

  bool complete() const {
    for (int c = 0; c < k_; ++c) {
      if (!sets_[c]) return false;
      Mask lowest = sets_[c] & (~sets_[c] + 1);
      if (flood(lowest, sets_[c]) != sets_[c]) return false;
    }
    for (auto [a, b] : minor_edges_) {
      if (!(neighbourhood(sets_[a]) & sets_[b])) return false;
    }
    return true;
  }

  bool search(std::size_t index, Mask unassigned) {
    if (!feasible(unassigned)) return false;
    if (complete()) return true;
    if (index == order_.size()) return false;
    Vertex v = order_[index];
    Mask bit = Mask{1} << v;
    Mask rest = unassigned & ~bit;
    for (int c = 0; c < k_; ++c) {
      if (!sets_[c]) {
        bool blocked = false;
        for (int d = 0; d < c; ++d) {
          if (twin_rep_[d] == twin_rep_[c] && !sets_[d]) {
            blocked = true;
            break;
          }
        }
        if (blocked) continue;
      }
      sets_[c] |= bit;
      if (search(index + 1, rest)) return true;
      sets_[c] &= ~bit;
    }
    return search(index + 1, rest);
  }

  int n_;
  int k_;
  std::vector<Edge> minor_edges_;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  std::vector<int> twin_rep_;
  std::vector<Mask> sets_;
  mutable std::vector<Mask> region_ = std::vector<Mask>(64);
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& host, const Graph& minor, MinorSearchOptions options) {
  const int cap = std::min(options.max_host_vertices, 64);
  if (host.order() > cap) {
    throw CapacityError("find_minor: host has " + std::to_string(host.order()) + " vertices, guard is " +
                        std::to_string(cap));
  }
  if (minor.order() == 0) return MinorModel{};
  if (minor.order() > host.order() || minor.size() > host.size()) return std::nullopt;
  if (minor.order() > 64) return std::nullopt;
  return MinorSearch(host, minor).run();
}

}  // namespace gcn
