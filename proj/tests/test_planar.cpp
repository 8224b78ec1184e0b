#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "gcn/decomposition.hpp"
#include "gcn/error.hpp"
#include "gcn/generators.hpp"
#include "gcn/planar.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

using namespace gcn;

namespace {

// Triangle 0, 1, 2 with vertex 3 inside.
const Rotation kK4{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};

Rotation octahedron() {
  // 0 in the middle, equator 1..4 counter-clockwise around it, 5 outside.
  Rotation rot(6);
  rot[0] = {1, 2, 3, 4};
  for (int i = 1; i <= 4; ++i) rot[i] = {5, i % 4 + 1, 0, (i + 2) % 4 + 1};
  rot[5] = {4, 3, 2, 1};
  return rot;
}

Rotation icosahedron() {
  Rotation rot{{1, 5, 11, 7, 8},  {0, 8, 2, 6, 5},  {1, 8, 9, 3, 6},  {2, 9, 10, 4, 6},
               {3, 10, 11, 5, 6}, {4, 11, 0, 1, 6}, {5, 1, 2, 3, 4},  {11, 10, 9, 8, 0},
               {7, 9, 2, 1, 0},   {8, 7, 10, 3, 2}, {9, 7, 11, 4, 3}, {5, 4, 10, 7, 0}};
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return rot;
}

PlanarEmbedding embed(const Rotation& rot, Edge outer, EmbeddingCheck check = EmbeddingCheck::General) {
  return validate_embedding(graph_from_rotation(rot), rot, outer, check);
}

// Every part is a shortest path in G minus the earlier parts.
bool parts_isometric(const Graph& g, const Decomposition& d) {
  std::vector<std::uint8_t> alive(g.order(), 1);
  for (const auto& p : d.parts()) {
    if (p.paths.size() != 1 || p.paths[0].size() != p.vertices.size()) return false;
    if (!is_isometric_path(GraphView(g, alive), p.paths[0])) return false;
    for (Vertex v : p.vertices) alive[v] = 0;
  }
  return true;
}

}  // namespace

TEST_CASE("embedding validation and faces") {
  const auto k4 = embed(kK4, {1, 0}, EmbeddingCheck::Maximal);
  CHECK(k4.face_count() == 4);
  CHECK(k4.face(k4.outer_face()).size() == 3);
  CHECK(k4.face_of(1, 0) == k4.outer_face());
  CHECK(k4.succ(0, 1) == 3);
  CHECK(k4.pred(0, 1) == 2);
  const auto oct = embed(octahedron(), {1, 2}, EmbeddingCheck::Maximal);
  CHECK(oct.face_count() == 8);
  CHECK(embed(icosahedron(), {0, 1}, EmbeddingCheck::Maximal).face_count() == 20);

  auto swapped = octahedron();
  std::swap(swapped[0][0], swapped[0][1]);
  CHECK_THROWS_AS(embed(swapped, {1, 2}), EmbeddingError);
  const Rotation c4{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  try {
    embed(c4, {0, 1}, EmbeddingCheck::Maximal);
    FAIL("expected rejection");
  } catch (const EmbeddingError& e) {
    CHECK(e.kind() == EmbeddingError::Kind::NotMaximal);
  }
  CHECK(embed(c4, {0, 1}).face_count() == 2);
  CHECK_THROWS_AS(embed(c4, {0, 2}), InputError);
  const Rotation asym{{1}, {}};
  CHECK_THROWS_AS(graph_from_rotation(asym), InputError);
}

TEST_CASE("perturbed triangulations are rejected") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto t = random_triangulation(30, rng);
    auto rot = t.embedding->rotation();
    for (auto& r : rot) {
      if (r.size() >= 4) {
        std::swap(r[0], r[2]);
        break;
      }
    }
    CHECK_THROWS_AS(validate_embedding(t.graph, rot, t.embedding->outer_dart()), EmbeddingError);
  }
}

TEST_CASE("rotation file round trip") {
  const auto oct = embed(octahedron(), {1, 2});
  std::istringstream in(to_rotation_text(oct));
  const auto rf = read_rotation(in);
  CHECK(rf.rotation == oct.rotation());
  CHECK(rf.outer == oct.outer_dart());
  std::istringstream bad("0: 1 2\nouter: 0\n");
  CHECK_THROWS_AS(read_rotation(bad), InputError);
}

TEST_CASE("triangulation") {
  const auto k4 = embed(kK4, {1, 0});
  const auto [same, same_emb] = triangulate(graph_from_rotation(kK4), k4);
  CHECK(same == graph_from_rotation(kK4));
  const Rotation c4{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  const Graph g4 = graph_from_rotation(c4);
  const auto [t4, e4] = triangulate(g4, embed(c4, {0, 1}));
  CHECK(t4.size() == 6);
  CHECK(e4.face_count() == 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<EmbeddedGraph> inputs;
    inputs.push_back(random_series_parallel(oracle::pick(rng, 3, 60), rng));
    inputs.push_back(grid(oracle::pick(rng, 2, 8), oracle::pick(rng, 2, 8)));
    inputs.push_back(embedded_cycle(oracle::pick(rng, 3, 12)));
    for (const auto& eg : inputs) {
      const auto [tg, te] = triangulate(eg.graph, *eg.embedding);
      CHECK(tg.size() == static_cast<std::size_t>(3 * tg.order() - 6));
      for (auto [u, v] : eg.graph.edges()) CHECK(tg.has_edge(u, v));
      CHECK_NOTHROW(validate_embedding(tg, te.rotation(), te.outer_dart(), EmbeddingCheck::Maximal));
    }
  }
}

TEST_CASE("isometric paths decomposition of small triangulations") {
  const Graph k3 = complete_graph(3);
  const Rotation tri{{1, 2}, {2, 0}, {0, 1}};
  const auto d3 = ipd_maximal_planar(k3, embed(tri, {1, 0}));
  CHECK(d3.vertex_sets() == std::vector<std::vector<Vertex>>{{0, 1}, {2}});
  const Graph k4 = graph_from_rotation(kK4);
  const auto d4 = ipd_maximal_planar(k4, embed(kK4, {1, 0}));
  CHECK(d4.vertex_sets() == std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3}});
  CHECK(width(k4, d4).width <= 2);
  const Graph oct = graph_from_rotation(octahedron());
  const auto doct = ipd_maximal_planar(oct, embed(octahedron(), {1, 2}));
  CHECK(width(oct, doct).width <= 2);
  CHECK(parts_isometric(oct, doct));
}

TEST_CASE("isometric paths decomposition of random triangulations") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Rng rng(seed);
    const auto t = random_triangulation(static_cast<int>(10 + 13 * seed), rng);
    const auto d = ipd_maximal_planar(t.graph, *t.embedding);
    CHECK(width(t.graph, d).width <= 2);
    CHECK(parts_isometric(t.graph, d));
    CHECK(check_f_flat(t.graph, d, SpreadFunction::affine(1), 4).ok);
    const auto L = order_from_decomposition(d);
    for (int r = 1; r <= 4; ++r) {
      CHECK(cost_of_order(t.graph, L, r, Mode::Weak) <= static_cast<int>(binomial(r + 2, 2)) * (2 * r + 1));
      CHECK(cost_of_order(t.graph, L, r, Mode::Strong) <= 3 * (2 * r + 1));
    }
  }
  const auto tg = triangulated_grid(7, 9);
  const auto d = ipd_maximal_planar(tg.graph, *tg.embedding);
  CHECK(width(tg.graph, d).width <= 2);
  CHECK(parts_isometric(tg.graph, d));
}

TEST_CASE("face tree is a tree-decomposition") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Rng rng(seed);
    const auto t = random_triangulation(static_cast<int>(4 + 9 * seed), rng);
    const Tree s = lex_bfs_tree(t.graph, 0);
    const auto ft = build_face_tree(t.graph, *t.embedding, s);
    CHECK(static_cast<int>(ft.edges.size()) == t.embedding->face_count() - 1);
    std::string why;
    CHECK_MESSAGE(check_tree_decomposition(t.graph, ft, &why), why);
    for (const auto& bag : ft.bags) CHECK(std::is_sorted(bag.begin(), bag.end()));
  }
}

TEST_CASE("lexbfs planar order") {
  const Graph k4 = graph_from_rotation(kK4);
  for (Vertex root = 0; root < 4; ++root) {
    const auto L = lexbfs_planar_order(k4, embed(kK4, {1, 0}), root);
    CHECK(L.size() == 4);
    CHECK(cost_of_order(k4, L, 1, Mode::Strong) <= 6);
  }
  const Graph ico = graph_from_rotation(icosahedron());
  const auto ie = embed(icosahedron(), {0, 1});
  CHECK(cost_of_order(ico, lexbfs_planar_order(ico, ie), 1, Mode::Strong) <= 6);
  const auto ord = lexbfs_planar_ordering(k4, embed(kK4, {1, 0}));
  std::string why;
  CHECK_MESSAGE(check_carord(k4, embed(kK4, {1, 0}), ord, &why), why);
  // Vertices of the outer face come first.
  std::vector<Vertex> first(ord.order.sequence().begin(), ord.order.sequence().begin() + 3);
  std::sort(first.begin(), first.end());
  CHECK(first == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("lexbfs planar order meets its budgets") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng(seed);
    const auto t = random_triangulation(static_cast<int>(20 + 17 * seed), rng);
    const auto ord = lexbfs_planar_ordering(t.graph, *t.embedding);
    std::string why;
    CHECK_MESSAGE(check_carord(t.graph, *t.embedding, ord, &why), why);
    for (int r = 1; r <= 4; ++r) {
      CHECK(cost_of_order(t.graph, ord.order, r, Mode::Strong) <= 5 * r + 1);
      const auto v = check_path_budgets(t.graph, ord, r);
      CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front().what));
    }
  }
}
