#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcn/graph.hpp"

namespace gcn {

/// Model of a graph M in a host G: one connected branch set per M-vertex,
/// pairwise disjoint, with an edge of G between the branch sets of every
/// M-edge.
struct MinorModel {
  std::vector<std::vector<Vertex>> branch_sets;
};

/// Independent validity check of a model of `minor` in `host`. On failure a
/// short reason is written to `why` when given.
bool is_minor_model(const Graph& host, const Graph& minor, const MinorModel& model, std::string* why = nullptr);

struct MinorSearchOptions {
  int max_host_vertices = 64;
};

/// Backtracking search for a model of `minor` in `host`. Every host vertex is
/// assigned to a branch set or left unused; partial assignments are pruned by
/// connectivity and edge-realisability of closed branch sets. Exponential;
/// intended for small hosts. Throws CapacityError beyond the size guard.
std::optional<MinorModel> find_minor(const Graph& host, const Graph& minor, MinorSearchOptions options = {});

}  // namespace gcn
