#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/graph.hpp"
#include "gcn/minor.hpp"

namespace gcn {

// ---------------------------------------------------------------------------
// Connected flat decompositions of K_t-minor-free graphs.

struct KtResult {
  /// Set when the construction went through.
  std::optional<Decomposition> decomposition;
  std::vector<int> path_counts;  // per part
  /// Set instead when some residual component saw t-1 attached parts; the
  /// branch sets are those parts plus the component (a K_t model).
  std::optional<MinorModel> certificate;

  bool found_minor() const { return certificate.has_value(); }
};

/// Each new part is a union of BFS-tree root paths inside the component it
/// is carved from, one per attached earlier part beyond the first, so it
/// spreads with f(r) = (t-3)(2r+1). Components are processed smallest
/// vertex first. Throws InputError for t < 4 or an empty graph.
KtResult kt_flat_decomposition(const Graph& g, int t);

/// (t-3)(2r+1).
SpreadFunction kt_spread(int t);

// ---------------------------------------------------------------------------
// Pebbled isometric-paths decompositions of H-minor-free graphs.

/// Model of one edge {h_i, h_j} (i < j): a path from the vertex pebbled by
/// p_ij in H_i to the vertex pebbled by p_ji in H_j whose interior lies on
/// the single part `part`.
struct EdgeModel {
  Path path;
  int part = -1;
  /// Isometry in G[D + endpoints] minus the endpoint edge, checked when the
  /// part was placed (D is the component the part was carved from).
  bool isometric_at_creation = false;
};

/// Pebbled minor model of a proper subgraph M of H' = H - apex attached to a
/// residual component. H' vertices are 0..k-1 (H minus the apex, ascending).
struct MinorModelState {
  std::vector<Vertex> component;  // C, sorted
  std::vector<std::uint8_t> present;  // h_i in M
  std::vector<std::vector<Vertex>> vertex_models;  // H_i (empty when absent)
  /// (i, j) -> vertex of H_i carrying pebble p_ij, for every H'-edge
  /// {h_i, h_j} with h_i in M.
  std::map<std::pair<int, int>, Vertex> pebbles;
  /// Edges of M keyed (i, j) with i < j.
  std::map<std::pair<int, int>, EdgeModel> edges;

  int model_vertex_count() const;
  nlohmann::ordered_json summary() const;
};

/// H - apex with vertices relabelled 0..k-1 in ascending order of their ids
/// in H, plus the map back to H.
struct ApexSplit {
  Graph rest;
  std::vector<Vertex> to_h;
  int h = 0;      // |E(H - apex)|
  int alpha = 0;  // isolated vertices of H - apex
};
ApexSplit split_apex(const Graph& H, Vertex apex);

/// Recomputes contact sets from scratch and checks the four invariants,
/// including 3(a)-3(d) literally. `part_of` gives the part index of placed
/// vertices and -1 elsewhere. On failure a reason goes to `why`.
bool validate_model_state(const Graph& g, const Graph& rest, const std::vector<int>& part_of,
                          const MinorModelState& state, std::string* why = nullptr);

struct ReestablishLog {
  std::vector<int> deleted_vertices;
  std::vector<std::pair<int, int>> deleted_edges;
  int absorbed = 0;  // vertices moved from edge models into vertex models
};

/// Adapts the model of the parent component to its sub-component `next`:
/// pebbles without contact are pushed along their edge models, absorbed
/// prefixes join the vertex model, contactless edges and vertices leave M,
/// and stranded pebbles move to the smallest contact vertex.
MinorModelState reestablish_invariants(const Graph& g, const Graph& rest, MinorModelState state,
                                       const std::vector<Vertex>& next, ReestablishLog* log = nullptr);

/// Step list of an h_ipd run.
struct BuilderTrace {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();

  /// Rebuilds the decomposition from the recorded parts.
  Decomposition replay(int n) const;
};

using StateObserver =
    std::function<void(const std::vector<int>& part_of, const MinorModelState& state)>;

struct HIpdOptions {
  /// Called after every re-establishment with the state of the new component.
  StateObserver observer;
  /// Run validate_model_state after every step and throw ConsistencyError
  /// on failure.
  bool validate = false;
};

struct HIpdResult {
  std::optional<Decomposition> decomposition;
  BuilderTrace trace;
  /// Model of H (indexed by H's vertex ids) when M reached H - apex.
  std::optional<MinorModel> certificate;
  int h = 0;
  int alpha = 0;

  bool found_minor() const { return certificate.has_value(); }
};

/// Iterative construction of isometric paths: Case 1 joins the pebbles of
/// the lexicographically least non-adjacent M pair forming an H'-edge by a
/// shortest path through the component, Case 2 opens the least unused model
/// vertex as a single-vertex path. Throws InputError for an empty G or an
/// apex outside H.
HIpdResult h_ipd(const Graph& g, const Graph& H, Vertex apex, const HIpdOptions& options = {});

/// h(2r+1) + alpha as a spread function of the decomposition parts.
long long h_ipd_strong_bound(int h, int alpha, int r);

}  // namespace gcn
