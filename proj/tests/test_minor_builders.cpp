#include "doctest.h"
#include "oracles.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/error.hpp"
#include "gcn/generators.hpp"
#include "gcn/minor.hpp"
#include "gcn/minor_builders.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

using namespace gcn;

namespace {

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

void check_kt(const Graph& g, int t) {
  const auto res = kt_flat_decomposition(g, t);
  if (res.found_minor()) {
    std::string why;
    CHECK_MESSAGE(is_minor_model(g, complete_graph(t), *res.certificate, &why), why);
    return;
  }
  REQUIRE(res.decomposition);
  const auto& d = *res.decomposition;
  CHECK(width(g, d).width <= t - 2);
  for (int c : res.path_counts) CHECK(c <= t - 3);
  CHECK(static_cast<int>(res.path_counts.size()) == d.size());
  for (const auto& p : d.parts()) CHECK(is_connected_set(g, p.vertices));
  CHECK(check_f_flat(g, d, kt_spread(t), 4).ok);
}

}  // namespace

TEST_CASE("kt builder returns a certificate on K_t") {
  for (int t = 4; t <= 7; ++t) {
    const auto res = kt_flat_decomposition(complete_graph(t), t);
    REQUIRE(res.found_minor());
    CHECK(is_minor_model(complete_graph(t), complete_graph(t), *res.certificate));
  }
  CHECK_THROWS_AS(kt_flat_decomposition(complete_graph(3), 3), InputError);
  CHECK_THROWS_AS(kt_flat_decomposition(Graph(0), 4), InputError);
}

TEST_CASE("kt builder on trees gives single-path parts") {
  oracle::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const Graph t = oracle::random_tree(rng, oracle::pick(rng, 1, 40));
    const auto res = kt_flat_decomposition(t, 4);
    REQUIRE(res.decomposition);
    CHECK(width(t, *res.decomposition).width <= 2);
    for (int c : res.path_counts) CHECK(c <= 1);
  }
}

TEST_CASE("kt builder on planar triangulations and k-trees") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto tri = random_triangulation(60, rng);
    check_kt(tri.graph, 5);
    const auto res = kt_flat_decomposition(tri.graph, 5);
    REQUIRE(res.decomposition);
    const auto L = order_from_decomposition(*res.decomposition);
    for (int r = 1; r <= 3; ++r) {
      CHECK(cost_of_order(tri.graph, L, r, Mode::Strong) <= bound_spd(kt_spread(5), 3, r));
      CHECK(cost_of_order(tri.graph, L, r, Mode::Weak) <= bound_spdwcol(kt_spread(5), 3, r));
    }
    check_kt(random_ktree(2, 40, rng), 4);
    check_kt(random_ktree(3, 40, rng), 5);
  }
}

TEST_CASE("kt builder on random graphs: certificate or flat decomposition") {
  oracle::Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, oracle::pick(rng, 1, 20), 0.25);
    check_kt(g, oracle::pick(rng, 4, 6));
  }
}

TEST_CASE("apex split") {
  const auto s = split_apex(complete_graph(4), 0);
  CHECK(s.rest == complete_graph(3));
  CHECK(s.to_h == std::vector<Vertex>{1, 2, 3});
  CHECK(s.h == 3);
  CHECK(s.alpha == 0);
  const auto c = split_apex(star(3), 0);
  CHECK(c.h == 0);
  CHECK(c.alpha == 3);
  CHECK_THROWS_AS(split_apex(star(3), 9), InputError);
}

TEST_CASE("h_ipd on a single vertex") {
  const auto res = h_ipd(Graph(1), complete_graph(4), 0);
  REQUIRE(res.decomposition);
  CHECK(res.decomposition->size() == 1);
  CHECK(res.decomposition->part(0).vertices == std::vector<Vertex>{0});
  CHECK_THROWS_AS(h_ipd(Graph(0), complete_graph(4), 0), InputError);
}

TEST_CASE("h_ipd completes a K4 model on K7") {
  // On K_7 the three model vertices, three edge paths and the apex each take
  // one vertex.
  const auto res = h_ipd(complete_graph(7), complete_graph(4), 0);
  REQUIRE(res.found_minor());
  CHECK(is_minor_model(complete_graph(7), complete_graph(4), *res.certificate));
  // On K_5 the component runs out first; the result is a decomposition.
  const auto k5 = h_ipd(complete_graph(5), complete_graph(4), 0);
  REQUIRE(k5.decomposition);
  CHECK(width(complete_graph(5), *k5.decomposition).width <= 9);
  const auto single = h_ipd(path_graph(3), Graph(1), 0);
  REQUIRE(single.found_minor());
  CHECK(is_minor_model(path_graph(3), Graph(1), *single.certificate));
}

TEST_CASE("h_ipd states stay valid and re-establishment is idempotent") {
  oracle::Rng rng(47);
  const std::vector<std::pair<Graph, Vertex>> excluded{
      {complete_graph(4), 0}, {complete_graph(5), 2}, {star(3), 0}, {cycle_graph(5), 1}};
  int mutations = 0;
  int observed = 0;
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, oracle::pick(rng, 1, 16), 0.2);
    const auto& [H, apex] = excluded[static_cast<std::size_t>(i) % excluded.size()];
    const auto split = split_apex(H, apex);
    HIpdOptions opt;
    opt.validate = true;
    opt.observer = [&](const std::vector<int>& part_of, const MinorModelState& s) {
      ++observed;
      std::string why;
      CHECK_MESSAGE(validate_model_state(g, split.rest, part_of, s, &why), why);
      const auto again = reestablish_invariants(g, split.rest, s, s.component);
      CHECK(again.summary() == s.summary());
      // Moving a pebble onto a vertex without contact must be caught.
      for (const auto& [key, v] : s.pebbles) {
        for (Vertex x : s.vertex_models[key.first]) {
          bool contact = false;
          for (Vertex y : g.neighbors(x)) {
            contact = contact || std::binary_search(s.component.begin(), s.component.end(), y);
          }
          if (contact || x == v) continue;
          auto bad = s;
          bad.pebbles[key] = x;
          CHECK_FALSE(validate_model_state(g, split.rest, part_of, bad));
          ++mutations;
          return;
        }
      }
    };
    const auto res = h_ipd(g, H, apex, opt);
    if (res.found_minor()) {
      CHECK(is_minor_model(g, H, *res.certificate));
      continue;
    }
    REQUIRE(res.decomposition);
    CHECK(res.trace.replay(g.order()).vertex_sets() == res.decomposition->vertex_sets());
    CHECK(width(g, *res.decomposition).width <= 3 * res.h + res.alpha);
    const auto report = certify(g, *res.decomposition, SpreadFunction::affine(1), {1, 3, std::nullopt, 14});
    CHECK(report.find("isometric_paths")->status == CheckStatus::Pass);
    CHECK(report.find("flatness")->status == CheckStatus::Pass);
  }
  CHECK(observed > 100);
  CHECK(mutations > 0);
}

TEST_CASE("h_ipd with K4 on series-parallel graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Rng rng(seed);
    const auto sp = random_series_parallel(40, rng);
    HIpdOptions opt;
    opt.validate = true;
    const auto res = h_ipd(sp.graph, complete_graph(4), 0, opt);
    REQUIRE(res.decomposition);
    CHECK(res.h == 3);
    CHECK(width(sp.graph, *res.decomposition).width <= 9);
    const auto L = order_from_decomposition(*res.decomposition);
    for (int r = 1; r <= 3; ++r) CHECK(cost_of_order(sp.graph, L, r, Mode::Strong) <= 3 * (2 * r + 1));
  }
}

TEST_CASE("h_ipd with a claw excluded on paths") {
  for (int n = 1; n <= 30; ++n) {
    const Graph p = path_graph(n);
    const auto res = h_ipd(p, star(3), 0);
    REQUIRE(res.decomposition);
    const auto L = order_from_decomposition(*res.decomposition);
    for (int r = 1; r <= 4; ++r) CHECK(cost_of_order(p, L, r, Mode::Strong) <= 3);
  }
}

TEST_CASE("h_ipd trace records each step") {
  Rng rng(3);
  const auto sp = random_series_parallel(25, rng);
  const auto res = h_ipd(sp.graph, complete_graph(4), 0);
  REQUIRE(res.decomposition);
  CHECK(static_cast<int>(res.trace.steps.size()) == res.decomposition->size());
  for (const auto& step : res.trace.steps) {
    CHECK(step.contains("part"));
    CHECK(step.contains("component"));
    CHECK(step.contains("children"));
  }
  CHECK(h_ipd_strong_bound(3, 0, 2) == 15);
  CHECK(h_ipd_strong_bound(0, 3, 5) == 3);
}
