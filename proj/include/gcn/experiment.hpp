#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/generators.hpp"
#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"
#include "gcn/minor.hpp"
#include "gcn/planar.hpp"
#include "gcn/reachability.hpp"

namespace gcn {

enum class Strategy { IpdPlanar, LexbfsPlanar, KtFlat, HIpd, Degeneracy };

Strategy parse_strategy(const std::string& name);
const char* to_string(Strategy s);

struct StrategyParams {
  int t = 5;                 // kt-flat
  std::optional<Graph> H;    // h-ipd
  Vertex apex = 0;           // h-ipd
  Vertex root = 0;           // lexbfs-planar
};

struct Instance {
  std::string id;
  std::string family;
  Graph graph;
  std::optional<PlanarEmbedding> embedding;
};

/// Order produced by a strategy plus everything needed to state its bounds.
struct StrategyRun {
  Strategy strategy = Strategy::Degeneracy;
  LinearOrder order;
  std::optional<Decomposition> decomposition;
  std::optional<MinorModel> certificate;  // excluded minor found instead
  int width = 0;                           // decomposition width when present
  int degeneracy = 0;
  int h = 0;
  int alpha = 0;
  nlohmann::ordered_json details;
};

/// Runs one strategy. Planar strategies need an embedding; a non-maximal
/// one is triangulated first and the order computed on the triangulation
/// (costs are then measured on the original graph, which can only lower
/// them). Throws InputError when a strategy's inputs are missing.
StrategyRun run_strategy(const Instance& inst, Strategy s, const StrategyParams& params);

/// Closed-form bound for the strategy at radius r; unset when the strategy
/// makes no claim for that mode / radius.
std::optional<long long> strategy_bound(const StrategyRun& run, const StrategyParams& params, Mode mode, int r);
/// Printable form of the same bound.
std::string strategy_bound_form(Strategy s, Mode mode);

struct BoundRow {
  std::string graph_id;
  std::string family;
  int n = 0;
  Strategy strategy = Strategy::Degeneracy;
  int r = 0;
  int cost_strong = 0;
  int cost_weak = 0;
  std::optional<long long> bound_strong;
  std::optional<long long> bound_weak;
  std::string note;  // set when the strategy could not run

  bool pass() const;
};

/// Measures strong and weak cost for every r in [r_min, r_max].
std::vector<BoundRow> evaluate_instance(const Instance& inst, Strategy s, const StrategyParams& params, int r_min,
                                        int r_max);

/// Rows for every (instance, strategy, r), instances processed in parallel
/// on up to `threads` workers; output order is (instance, strategy, r).
std::vector<BoundRow> run_matrix(const std::vector<Instance>& instances, const std::vector<Strategy>& strategies,
                                 const StrategyParams& params, int r_min, int r_max, unsigned threads = 0);

nlohmann::ordered_json rows_to_json(const std::vector<BoundRow>& rows);
/// graph_id,family,n,strategy,r,cost_strong,cost_weak,bound_strong,bound_weak
std::string rows_to_csv(const std::vector<BoundRow>& rows);

/// `count` seeded members of a family; each member's seed is drawn from a
/// generator seeded with `seed`. For "triangulation" without parameters the
/// order is drawn from 50..500.
std::vector<Instance> make_instances(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                                     int count);

}  // namespace gcn
