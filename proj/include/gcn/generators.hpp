#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcn/graph.hpp"
#include "gcn/planar.hpp"

namespace gcn {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by modulo reduction, so sequences do not
/// depend on the standard library's distribution implementations.
int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng);

struct EmbeddedGraph {
  Graph graph;
  std::optional<PlanarEmbedding> embedding;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
EmbeddedGraph embedded_path(int n);
EmbeddedGraph embedded_cycle(int n);

/// m x n grid, vertex (x, y) has id x * n + y. The embedding follows the
/// plane coordinates.
EmbeddedGraph grid(int m, int n);
/// Grid with one diagonal per cell, triangulated (maximal planar).
EmbeddedGraph triangulated_grid(int m, int n);

/// Random forest: vertex i > 0 joins a random earlier vertex with
/// probability `attach`, otherwise starts a new tree.
Graph random_forest(int n, Rng& rng, double attach = 0.8);

/// Random k-tree on n >= k+1 vertices: a (k+1)-clique, then each new vertex
/// joins a uniformly chosen existing k-clique. Tree-width exactly k.
Graph random_ktree(int k, int n, Rng& rng);

/// Random maximal planar graph: stacked insertions into random inner faces
/// of the triangle 0,1,2, followed by about n random edge flips. The outer
/// face is the triangle to the left of dart 1->0.
EmbeddedGraph random_triangulation(int n, Rng& rng);

/// Random series-parallel graph: a random 2-tree grown by face insertions,
/// then random edge deletions that keep it connected.
EmbeddedGraph random_series_parallel(int n, Rng& rng, double deletion = 0.3);

/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, Rng& rng);

/// Builds a family member from a name and integer parameters:
/// path n | cycle n | complete n | grid m n | triangulated-grid m n |
/// forest n | ktree k n | triangulation n | series-parallel n | gnp n pct.
/// Throws InputError on unknown names or bad parameters.
EmbeddedGraph generate(const std::string& family, const std::vector<int>& params, std::uint64_t seed);

/// Names accepted by `generate`.
const std::vector<std::string>& family_names();

}  // namespace gcn
