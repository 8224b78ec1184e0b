#pragma once

#include <cstdint>
#include <vector>

#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"

namespace gcn {

/// Path-length bound: a non-negative integer or unbounded.
class Radius {
 public:
  constexpr Radius(int r) : value_(r) {}  // NOLINT(google-explicit-constructor)
  static constexpr Radius infinite() { return Radius(-1); }

  constexpr bool is_infinite() const { return value_ < 0; }
  constexpr int value() const { return value_; }
  /// Simple paths in an n-vertex graph have length <= n-1, so infinity
  /// resolves to n-1.
  constexpr int resolve(int n) const { return is_infinite() ? (n > 0 ? n - 1 : 0) : value_; }

  friend constexpr bool operator==(Radius, Radius) = default;

 private:
  int value_;
};

enum class Mode { Weak, Strong };

/// Vertices u weakly r-reachable from v: some u-v path of length <= r has u
/// as its L-minimum. Contains v. Sorted by id.
std::vector<Vertex> wreach(const Graph& g, const LinearOrder& L, Vertex v, Radius r);

/// Vertices u <=_L v strongly r-reachable from v: some u-v path of length
/// <= r has every inner vertex L-greater than v. Contains v. Sorted by id.
std::vector<Vertex> sreach(const Graph& g, const LinearOrder& L, Vertex v, Radius r);

/// |WReach_r| or |SReach_r| for every vertex.
std::vector<int> reach_sizes(const Graph& g, const LinearOrder& L, Radius r, Mode mode);

/// max_v |WReach_r[G,L,v]| (weak) or max_v |SReach_r[G,L,v]| (strong);
/// 0 on the empty graph.
int cost_of_order(const Graph& g, const LinearOrder& L, Radius r, Mode mode);

struct ExactOptions {
  int max_vertices = 10;
};

struct ExactResult {
  int value = 0;
  LinearOrder order;  // lexicographically least optimal order
};

/// wcol_r (weak) or col_r (strong) by branch and bound over orders built
/// from the first position upward. The cost of a placed vertex never changes
/// once its prefix is fixed, so the running maximum is a valid bound.
/// Throws CapacityError above `max_vertices` (hard limit 64).
ExactResult exact_gcn(const Graph& g, Radius r, Mode mode, ExactOptions options = {});

struct FillInGraph {
  Graph base;
  std::vector<Edge> added;  // (u, v) with u < v, sorted
  Graph filled;
};

/// Fill-in G_L: eliminate vertices from the L-largest down, turning the
/// L-smaller neighbourhood of each eliminated vertex into a clique.
FillInGraph fill_in(const Graph& g, const LinearOrder& L);

/// omega(G_L) - 1; 0 for edgeless graphs, -1 for the empty graph.
int elimination_width(const Graph& g, const LinearOrder& L);

struct WidthOptions {
  int max_vertices = 20;
};

/// Minimum elimination width over all orders, by dynamic programming over
/// vertex subsets. -1 on the empty graph.
int treewidth_exact(const Graph& g, WidthOptions options = {});

/// Tree-depth via td(S) = 1 + min_v td(S - v) on connected S and the
/// maximum over components otherwise, memoised on subsets.
int treedepth_exact(const Graph& g, WidthOptions options = {});

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

struct BinomialCheck {
  bool holds = true;
  int elimination_width = 0;
  std::uint64_t bound = 1;
  int max_wreach = 0;
};

/// max_v |WReach_r| <= C(r + k, k) with k the elimination width of L.
BinomialCheck check_binomial_bound(const Graph& g, const LinearOrder& L, int r);

}  // namespace gcn
