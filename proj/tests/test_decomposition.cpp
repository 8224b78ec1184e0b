#include "doctest.h"
#include "oracles.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/error.hpp"
#include "gcn/generators.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

using namespace gcn;

namespace {

// Width by definition: every stage, every residual component, attached parts.
int width_oracle(const Graph& g, const Decomposition& d) {
  int best = 0;
  std::vector<bool> keep(g.order(), true);
  for (int stage = 0; stage <= d.size(); ++stage) {
    for (const auto& c : oracle::components(g, keep)) {
      std::set<int> attached;
      for (Vertex v : c) {
        for (Vertex u : g.neighbors(v)) {
          if (!keep[u]) attached.insert(d.part_of(u));
        }
      }
      best = std::max(best, static_cast<int>(attached.size()));
    }
    if (stage < d.size()) {
      for (Vertex v : d.part(stage).vertices) keep[v] = false;
    }
  }
  return best;
}

long long max_spread(const Graph& g, const Decomposition& d, int r) {
  long long best = 0;
  std::vector<bool> keep(g.order(), true);
  for (int i = 0; i < d.size(); ++i) {
    const auto dist = oracle::floyd_induced(g, keep);
    for (int v = 0; v < g.order(); ++v) {
      if (!keep[v]) continue;
      long long c = 0;
      for (Vertex u : d.part(i).vertices) c += dist[v][u] <= r ? 1 : 0;
      best = std::max(best, c);
    }
    for (Vertex v : d.part(i).vertices) keep[v] = false;
  }
  return best;
}

// Random decomposition into BFS-path parts: repeatedly peel a shortest path
// from a random residual vertex to the farthest vertex of its component.
Decomposition random_path_decomposition(const Graph& g, oracle::Rng& rng) {
  std::vector<std::uint8_t> alive(g.order(), 1);
  std::vector<Part> parts;
  int left = g.order();
  while (left > 0) {
    std::vector<Vertex> live;
    for (int v = 0; v < g.order(); ++v) {
      if (alive[v]) live.push_back(v);
    }
    const Vertex s = live[rng() % live.size()];
    const GraphView view(g, alive);
    const Tree t = bfs_tree(view, s);
    const Vertex far = t.order.back();
    Path p = t.root_path(far);
    for (Vertex v : p) alive[v] = 0;
    left -= static_cast<int>(p.size());
    parts.push_back({p, {p}});
  }
  return Decomposition(g.order(), parts);
}

}  // namespace

TEST_CASE("decomposition validates the partition") {
  std::vector<Part> overlap{{{0, 1}, {}}, {{1, 2}, {}}};
  std::vector<Part> missing{{{0, 1}, {}}};
  std::vector<Part> empty{{{0, 1, 2}, {}}, {{}, {}}};
  CHECK_THROWS_AS(Decomposition(3, overlap), InputError);
  CHECK_THROWS_AS(Decomposition(3, missing), InputError);
  CHECK_THROWS_AS(Decomposition(3, empty), InputError);
  const Decomposition d(3, {{{2}, {}}, {{0, 1}, {}}});
  CHECK(d.part_of(2) == 0);
  CHECK(Decomposition::parse(3, d.to_text()).vertex_sets() == d.vertex_sets());
  CHECK_THROWS_AS(Decomposition::parse(3, "0 1\n1 2\n"), InputError);
}

TEST_CASE("width on basic cases") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Part> singles;
    for (int v = 0; v < n; ++v) singles.push_back({{v}, {}});
    CHECK(width(complete_graph(n), Decomposition(n, singles)).width == n - 1);
    std::vector<Part> whole{{{}, {}}};
    for (int v = 0; v < n; ++v) whole[0].vertices.push_back(v);
    CHECK(width(complete_graph(n), Decomposition(n, whole)).width == 0);
  }
}

TEST_CASE("width matches the stage-by-stage definition") {
  oracle::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const int n = oracle::pick(rng, 1, 16);
    const Graph g = oracle::random_graph(rng, n, 0.2);
    const auto L = oracle::random_order(rng, n);
    // Random partition in random sequence.
    std::vector<Part> parts;
    for (int p = 0; p < n; ++p) {
      if (parts.empty() || rng() % 3 == 0) parts.push_back({});
      parts.back().vertices.push_back(L.at(p));
    }
    const Decomposition d(n, parts);
    const auto w = width(g, d);
    CHECK(w.width == width_oracle(g, d));
    if (w.width > 0) CHECK(static_cast<int>(w.attached.size()) == w.width);
  }
}

TEST_CASE("flatness") {
  const Graph p = path_graph(9);
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const Decomposition one(9, {{all, {all}}});
  CHECK(check_f_flat(p, one, SpreadFunction::affine(1), 6).ok);
  const Decomposition clique(5, {{{0, 1, 2, 3, 4}, {}}});
  const auto bad = check_f_flat(complete_graph(5), clique, SpreadFunction::custom("1", [](int) { return 1LL; }), 2);
  CHECK_FALSE(bad.ok);
  CHECK(bad.count > bad.allowed);
}

TEST_CASE("path decompositions are flat with the path count spread") {
  oracle::Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_connected_graph(rng, oracle::pick(rng, 2, 18), 0.12);
    const Decomposition d = random_path_decomposition(g, rng);
    CHECK(check_f_flat(g, d, SpreadFunction::affine(1), 5).ok);
    for (int r = 0; r <= 5; ++r) CHECK(max_spread(g, d, r) <= 2 * r + 1);
    // Strong cost of the derived order within (k+1) times the observed spread.
    const int k = width(g, d).width;
    const auto L = order_from_decomposition(d);
    for (int r = 1; r <= 4; ++r) CHECK(cost_of_order(g, L, r, Mode::Strong) <= (k + 1) * max_spread(g, d, r));
    const auto report = certify(g, d, SpreadFunction::affine(1), {1, 4, std::nullopt, 14});
    CHECK(report.find("isometric_paths")->status == CheckStatus::Pass);
    CHECK(report.find("flatness")->status == CheckStatus::Pass);
  }
}

TEST_CASE("derived order") {
  const Decomposition singles(4, {{{2}, {}}, {{0}, {}}, {{3}, {}}, {{1}, {}}});
  CHECK(order_from_decomposition(singles) == LinearOrder(std::vector<Vertex>{2, 0, 3, 1}));
  const Decomposition path(4, {{{0, 1, 2, 3}, {{3, 1, 0, 2}}}});
  CHECK(order_from_decomposition(path) == LinearOrder(std::vector<Vertex>{3, 1, 0, 2}));
  CHECK(order_from_decomposition(path, WithinPartRule::Ascending) == LinearOrder::identity(4));
  const Decomposition two_paths(4, {{{0, 1, 2, 3}, {{3, 1}, {2, 0}}}});
  CHECK(order_from_decomposition(two_paths) == LinearOrder::identity(4));
}

TEST_CASE("closed-form bounds") {
  const auto f = SpreadFunction::affine(1);
  CHECK(f.form() == "1*(2r+1)");
  CHECK(SpreadFunction::affine(3, 2).form() == "3*(2r+1)+2");
  CHECK(bound_spd(f, 2, 1) == 9);
  CHECK(bound_spd(f, 0, 3) == 7);
  CHECK(bound_spdwcol(f, 2, 2) == 30);
  CHECK(bound_spdwcol(f, 0, 4) == 9);
}

TEST_CASE("certify on a disconnected part") {
  const Graph p = path_graph(4);
  const Decomposition d(4, {{{0, 2}, {}}, {{1, 3}, {}}});
  const auto report = certify(p, d, SpreadFunction::affine(2), {1, 3, std::nullopt, 14});
  CHECK(report.find("connected")->status == CheckStatus::Fail);
  CHECK(report.find("contraction_treewidth")->status == CheckStatus::Skipped);
  CHECK(report.find("weak_cost")->status == CheckStatus::Skipped);
  CHECK_FALSE(report.passed());
  CHECK(report.to_json()["checks"].size() == report.checks.size());
}

TEST_CASE("contracting a connected decomposition keeps tree-width within the width") {
  oracle::Rng rng(35);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_connected_graph(rng, oracle::pick(rng, 2, 12), 0.2);
    const Decomposition d = random_path_decomposition(g, rng);
    const auto report = certify(g, d, SpreadFunction::affine(1), {1, 2, std::nullopt, 14});
    CHECK(report.find("contraction_treewidth")->status == CheckStatus::Pass);
    std::vector<std::vector<Vertex>> sets = d.vertex_sets();
    if (sets.size() <= 7) CHECK(oracle::treewidth(contract_parts(g, sets)) <= width_oracle(g, d));
  }
}
