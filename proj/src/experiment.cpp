#include "gcn/experiment.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "gcn/error.hpp"
#include "gcn/minor_builders.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

namespace {

using json = nlohmann::ordered_json;

bool is_triangulated(const Graph& g, const PlanarEmbedding& emb) {
  if (g.order() < 3 || static_cast<long long>(g.size()) != 3LL * g.order() - 6) return false;
  for (const auto& f : emb.faces()) {
    if (f.size() != 3) return false;
  }
  return true;
}

// The instance itself when maximal planar, its triangulation otherwise.
std::pair<Graph, PlanarEmbedding> maximal_host(const Instance& inst, bool& triangulated) {
  if (!inst.embedding) throw InputError("planar strategies need an embedding (--embedding)");
  triangulated = !is_triangulated(inst.graph, *inst.embedding);
  if (!triangulated) return {inst.graph, *inst.embedding};
  return triangulate(inst.graph, *inst.embedding);
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
  if (name == "ipd-planar") return Strategy::IpdPlanar;
  if (name == "lexbfs-planar") return Strategy::LexbfsPlanar;
  if (name == "kt-flat") return Strategy::KtFlat;
  if (name == "h-ipd") return Strategy::HIpd;
  if (name == "degeneracy") return Strategy::Degeneracy;
  throw InputError("unknown strategy '" + name + "'");
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::IpdPlanar:
      return "ipd-planar";
    case Strategy::LexbfsPlanar:
      return "lexbfs-planar";
    case Strategy::KtFlat:
      return "kt-flat";
    case Strategy::HIpd:
      return "h-ipd";
    case Strategy::Degeneracy:
      return "degeneracy";
  }
  return "?";
}

StrategyRun run_strategy(const Instance& inst, Strategy s, const StrategyParams& params) {
  StrategyRun run;
  run.strategy = s;
  const Graph& g = inst.graph;
  switch (s) {
    case Strategy::IpdPlanar: {
      bool triangulated = false;
      auto [host, emb] = maximal_host(inst, triangulated);
      auto d = ipd_maximal_planar(host, emb);
      run.width = width(host, d).width;
      run.order = order_from_decomposition(d);
      run.details = json{{"triangulated", triangulated}, {"parts", d.size()}, {"width", run.width}};
      run.decomposition = std::move(d);
      break;
    }
    case Strategy::LexbfsPlanar: {
      bool triangulated = false;
      auto [host, emb] = maximal_host(inst, triangulated);
      run.order = lexbfs_planar_order(host, emb, params.root);
      run.details = json{{"triangulated", triangulated}, {"root", params.root}};
      break;
    }
    case Strategy::KtFlat: {
      auto res = kt_flat_decomposition(g, params.t);
      if (res.certificate) {
        run.certificate = std::move(res.certificate);
        run.details = json{{"t", params.t}, {"minor_found", true}};
        break;
      }
      run.width = width(g, *res.decomposition).width;
      run.order = order_from_decomposition(*res.decomposition);
      int paths = 0;
      for (int c : res.path_counts) paths = std::max(paths, c);
      run.details = json{{"t", params.t}, {"parts", res.decomposition->size()}, {"width", run.width}, {"max_paths", paths}};
      run.decomposition = std::move(res.decomposition);
      break;
    }
    case Strategy::HIpd: {
      if (!params.H) throw InputError("h-ipd needs an excluded graph (--H)");
      auto res = h_ipd(g, *params.H, params.apex);
      run.h = res.h;
      run.alpha = res.alpha;
      if (res.certificate) {
        run.certificate = std::move(res.certificate);
        run.details = json{{"h", run.h}, {"alpha", run.alpha}, {"minor_found", true}};
        break;
      }
      run.width = width(g, *res.decomposition).width;
      run.order = order_from_decomposition(*res.decomposition);
      run.details = json{{"h", run.h}, {"alpha", run.alpha}, {"parts", res.decomposition->size()}, {"width", run.width}};
      run.decomposition = std::move(res.decomposition);
      break;
    }
    case Strategy::Degeneracy: {
      auto d = degeneracy_order(g);
      run.order = d.order;
      run.degeneracy = d.degeneracy;
      run.details = json{{"degeneracy", d.degeneracy}};
      break;
    }
  }
  return run;
}

std::optional<long long> strategy_bound(const StrategyRun& run, const StrategyParams& params, Mode mode, int r) {
  const long long spread = 2LL * r + 1;
  const bool strong = mode == Mode::Strong;
  switch (run.strategy) {
    case Strategy::IpdPlanar:
      return strong ? 3 * spread : static_cast<long long>(binomial(r + 2, 2)) * spread;
    case Strategy::LexbfsPlanar:
      if (strong) return 5LL * r + 1;
      return std::nullopt;
    case Strategy::KtFlat: {
      const int t = params.t;
      if (strong) return static_cast<long long>(t - 1) * (t - 3) * spread;
      return static_cast<long long>(binomial(r + t - 2, t - 2)) * (t - 3) * spread;
    }
    case Strategy::HIpd: {
      if (strong) return run.h * spread + run.alpha;
      const int k = 3 * run.h + run.alpha;
      return static_cast<long long>(binomial(r + k, k)) * spread;
    }
    case Strategy::Degeneracy:
      if (r == 1) return run.degeneracy + 1LL;
      return std::nullopt;
  }
  return std::nullopt;
}

std::string strategy_bound_form(Strategy s, Mode mode) {
  const bool strong = mode == Mode::Strong;
  switch (s) {
    case Strategy::IpdPlanar:
      return strong ? "3(2r+1)" : "C(r+2,2)(2r+1)";
    case Strategy::LexbfsPlanar:
      return strong ? "5r+1" : "";
    case Strategy::KtFlat:
      return strong ? "(t-1)(t-3)(2r+1)" : "C(r+t-2,t-2)(t-3)(2r+1)";
    case Strategy::HIpd:
      return strong ? "h(2r+1)+alpha" : "C(r+3h+alpha,3h+alpha)(2r+1)";
    case Strategy::Degeneracy:
      return "d+1 at r=1";
  }
  return "";
}

bool BoundRow::pass() const {
  if (!note.empty()) return false;
  if (bound_strong && cost_strong > *bound_strong) return false;
  if (bound_weak && cost_weak > *bound_weak) return false;
  return true;
}

std::vector<BoundRow> evaluate_instance(const Instance& inst, Strategy s, const StrategyParams& params, int r_min,
                                        int r_max) {
  std::vector<BoundRow> rows;
  auto base = [&](int r) {
    BoundRow row;
    row.graph_id = inst.id;
    row.family = inst.family;
    row.n = inst.graph.order();
    row.strategy = s;
    row.r = r;
    return row;
  };
  std::optional<StrategyRun> run;
  std::string failure;
  try {
    run = run_strategy(inst, s, params);
    if (run->certificate) failure = "excluded minor found";
  } catch (const InputError& e) {
    failure = e.what();
  } catch (const EmbeddingError& e) {
    failure = e.what();
  }
  for (int r = r_min; r <= r_max; ++r) {
    BoundRow row = base(r);
    if (!failure.empty()) {
      row.note = failure;
    } else {
      row.cost_strong = cost_of_order(inst.graph, run->order, r, Mode::Strong);
      row.cost_weak = cost_of_order(inst.graph, run->order, r, Mode::Weak);
      row.bound_strong = strategy_bound(*run, params, Mode::Strong, r);
      row.bound_weak = strategy_bound(*run, params, Mode::Weak, r);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BoundRow> run_matrix(const std::vector<Instance>& instances, const std::vector<Strategy>& strategies,
                                 const StrategyParams& params, int r_min, int r_max, unsigned threads) {
  std::vector<std::vector<BoundRow>> per_instance(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        for (Strategy s : strategies) {
          auto rows = evaluate_instance(instances[i], s, params, r_min, r_max);
          per_instance[i].insert(per_instance[i].end(), rows.begin(), rows.end());
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<BoundRow> out;
  for (auto& rows : per_instance) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

json rows_to_json(const std::vector<BoundRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json item;
    item["graph_id"] = row.graph_id;
    item["family"] = row.family;
    item["n"] = row.n;
    item["strategy"] = to_string(row.strategy);
    item["r"] = row.r;
    item["cost_strong"] = row.cost_strong;
    item["cost_weak"] = row.cost_weak;
    item["bound_strong"] = row.bound_strong ? json(*row.bound_strong) : json(nullptr);
    item["bound_weak"] = row.bound_weak ? json(*row.bound_weak) : json(nullptr);
    item["pass"] = row.pass();
    if (!row.note.empty()) item["note"] = row.note;
    out.push_back(std::move(item));
  }
  return out;
}

std::string rows_to_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "graph_id,family,n,strategy,r,cost_strong,cost_weak,bound_strong,bound_weak\n";
  for (const auto& row : rows) {
    out << row.graph_id << ',' << row.family << ',' << row.n << ',' << to_string(row.strategy) << ',' << row.r << ',';
    if (row.note.empty()) out << row.cost_strong << ',' << row.cost_weak;
    else out << ',';
    out << ',';
    if (row.bound_strong) out << *row.bound_strong;
    out << ',';
    if (row.bound_weak) out << *row.bound_weak;
    out << '\n';
  }
  return out.str();
}

std::vector<Instance> make_instances(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                                     int count) {
  if (count < 1) throw InputError("count must be positive");
  Rng master(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    auto p = params;
    if (p.empty() && family == "triangulation") p = {uniform_int(master, 50, 500)};
    if (p.empty() && family == "series-parallel") p = {uniform_int(master, 20, 300)};
    const std::uint64_t s = master();
    auto eg = generate(family, p, s);
    std::ostringstream id;
    id << family;
    for (int x : p) id << '-' << x;
    id << "-s" << i;
    out.push_back(Instance{id.str(), family, std::move(eg.graph), std::move(eg.embedding)});
  }
  return out;
}

}  // namespace gcn
