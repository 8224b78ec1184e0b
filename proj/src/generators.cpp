#include "gcn/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "gcn/error.hpp"

namespace gcn {

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::size_t slot(const std::vector<Vertex>& cyc, Vertex u) {
  auto it = std::find(cyc.begin(), cyc.end(), u);
  if (it == cyc.end()) throw ConsistencyError("rotation lacks " + std::to_string(u));
  return static_cast<std::size_t>(it - cyc.begin());
}

void insert_after(std::vector<Vertex>& cyc, Vertex u, Vertex w) {
  cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(slot(cyc, u)) + 1, w);
}

void insert_before(std::vector<Vertex>& cyc, Vertex u, Vertex w) {
  cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(slot(cyc, u)), w);
}

void erase(std::vector<Vertex>& cyc, Vertex u) { cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(slot(cyc, u))); }

Vertex pred(const std::vector<Vertex>& cyc, Vertex u) {
  const std::size_t s = slot(cyc, u);
  return cyc[(s + cyc.size() - 1) % cyc.size()];
}

// Rotation read off straight-line coordinates: neighbours sorted by angle.
Rotation rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
  Rotation rot(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& r = rot[v];
    r.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    auto angle = [&](Vertex u) { return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first); };
    std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return rot;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

EmbeddedGraph embedded_path(int n) {
  Graph g = path_graph(n);
  Rotation rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  Edge outer = n >= 2 ? Edge{0, 1} : Edge{-1, -1};
  auto emb = validate_embedding(g, std::move(rot), outer);
  return {std::move(g), std::move(emb)};
}

EmbeddedGraph embedded_cycle(int n) {
  Graph g = cycle_graph(n);
  Rotation rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) rot[v] = {(v + 1) % n, (v + n - 1) % n};
  auto emb = validate_embedding(g, std::move(rot), {1, 0});
  return {std::move(g), std::move(emb)};
}

EmbeddedGraph grid(int m, int n) {
  require(m >= 1 && n >= 1, "grid needs positive sides");
  std::vector<Edge> e;
  std::vector<std::pair<double, double>> xy;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      const int id = x * n + y;
      xy.emplace_back(x, y);
      if (y + 1 < n) e.emplace_back(id, id + 1);
      if (x + 1 < m) e.emplace_back(id, id + n);
    }
  }
  Graph g(m * n, e);
  if (g.size() == 0) {
    auto single = validate_embedding(g, Rotation(1), {-1, -1});
    return {std::move(g), std::move(single)};
  }
  // Walking (1,0) -> (0,0) keeps the outside on the left.
  Edge outer = m >= 2 ? Edge{n, 0} : Edge{1, 0};
  auto emb = validate_embedding(g, rotation_from_coordinates(g, xy), outer);
  return {std::move(g), std::move(emb)};
}

EmbeddedGraph triangulated_grid(int m, int n) {
  require(m >= 2 && n >= 2, "triangulated grid needs sides >= 2");
  std::vector<Edge> e;
  std::vector<std::pair<double, double>> xy;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      const int id = x * n + y;
      xy.emplace_back(x, y);
      if (y + 1 < n) e.emplace_back(id, id + 1);
      if (x + 1 < m) e.emplace_back(id, id + n);
      if (x + 1 < m && y + 1 < n) e.emplace_back(id, id + n + 1);
    }
  }
  Graph g(m * n, e);
  auto emb = validate_embedding(g, rotation_from_coordinates(g, xy), {n, 0});
  auto [tri, tri_emb] = triangulate(g, emb);
  return {std::move(tri), std::move(tri_emb)};
}

Graph random_forest(int n, Rng& rng, double attach) {
  require(n >= 1, "forest needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    if (uniform_real(rng) < attach) e.emplace_back(uniform_int(rng, 0, i - 1), i);
  }
  return Graph(n, e);
}

Graph random_ktree(int k, int n, Rng& rng) {
  require(k >= 1 && n >= k + 1, "ktree needs k >= 1 and n >= k+1");
  std::vector<Edge> e;
  std::vector<std::vector<Vertex>> cliques;
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) e.emplace_back(i, j);
    std::vector<Vertex> q;
    for (int j = 0; j <= k; ++j) {
      if (j != i) q.push_back(j);
    }
    cliques.push_back(std::move(q));
  }
  for (int w = k + 1; w < n; ++w) {
    const auto base = cliques[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(cliques.size()) - 1))];
    for (Vertex x : base) e.emplace_back(x, w);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      auto q = base;
      q[drop] = w;
      cliques.push_back(std::move(q));
    }
  }
  return Graph(n, e);
}

EmbeddedGraph random_triangulation(int n, Rng& rng) {
  require(n >= 3, "triangulation needs n >= 3");
  Rotation rot(static_cast<std::size_t>(n));
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  // Inner faces as counter-clockwise triples.
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
  for (Vertex w = 3; w < n; ++w) {
    const auto idx = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(faces.size()) - 1));
    const auto [a, b, c] = faces[idx];
    insert_after(rot[a], b, w);
    insert_after(rot[b], c, w);
    insert_after(rot[c], a, w);
    rot[w] = {a, b, c};
    faces[idx] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
  }
  // Flips break up the stacked structure. Faces next to the outer triangle
  // are left alone so that dart 1->0 keeps the outer face on its left.
  auto is_outer = [](Vertex x, Vertex y, Vertex z) {
    return (x == 1 && y == 0) || (y == 1 && z == 0) || (z == 1 && x == 0);
  };
  for (int attempt = 0; attempt < n; ++attempt) {
    const Vertex a = uniform_int(rng, 0, n - 1);
    const Vertex b = rot[a][static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(rot[a].size()) - 1))];
    const Vertex c = pred(rot[b], a);  // apex of the face left of a->b
    const Vertex d = pred(rot[a], b);  // apex of the face left of b->a
    if (is_outer(a, b, c) || is_outer(b, a, d)) continue;
    if (c == d || rot[a].size() <= 3 || rot[b].size() <= 3) continue;
    if (std::find(rot[c].begin(), rot[c].end(), d) != rot[c].end()) continue;
    erase(rot[a], b);
    erase(rot[b], a);
    const Vertex before_b = pred(rot[c], b);
    insert_after(rot[d], b, c);
    insert_after(rot[c], before_b, d);
  }
  Graph g = graph_from_rotation(rot);
  auto emb = validate_embedding(g, std::move(rot), {1, 0}, EmbeddingCheck::Maximal);
  return {std::move(g), std::move(emb)};
}

EmbeddedGraph random_series_parallel(int n, Rng& rng, double deletion) {
  require(n >= 2, "series-parallel needs n >= 2");
  Rotation rot(static_cast<std::size_t>(n));
  rot[0] = {1};
  rot[1] = {0};
  std::vector<Edge> darts{{0, 1}};
  for (Vertex w = 2; w < n; ++w) {
    auto [u, v] = darts[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(darts.size()) - 1))];
    if (rng() & 1) std::swap(u, v);
    // w goes into the face left of u->v.
    insert_after(rot[u], v, w);
    insert_before(rot[v], u, w);
    rot[w] = {u, v};
    darts.emplace_back(u, w);
    darts.emplace_back(v, w);
  }
  Graph g = graph_from_rotation(rot);
  auto edges = g.edges();
  std::vector<std::size_t> perm(edges.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
  }
  std::set<Edge> kept(edges.begin(), edges.end());
  for (std::size_t i : perm) {
    if (uniform_real(rng) >= deletion) continue;
    const auto [u, v] = edges[i];
    kept.erase(edges[i]);
    std::vector<Edge> rest(kept.begin(), kept.end());
    Graph h(n, rest);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : h.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (!seen[v]) {
      kept.insert(edges[i]);
      continue;
    }
    erase(rot[u], v);
    erase(rot[v], u);
  }
  Graph out = graph_from_rotation(rot);
  const Edge outer = out.edges().front();
  auto emb = validate_embedding(out, std::move(rot), outer);
  return {std::move(out), std::move(emb)};
}

Graph random_gnp(int n, double p, Rng& rng) {
  require(n >= 0, "gnp needs n >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_real(rng) < p) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"path",   "cycle", "complete",      "grid",           "triangulated-grid",
                                              "forest", "ktree", "triangulation", "series-parallel", "gnp"};
  return names;
}

EmbeddedGraph generate(const std::string& family, const std::vector<int>& params, std::uint64_t seed) {
  Rng rng(seed);
  auto need = [&](std::size_t count) {
    require(params.size() == count, family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "path") {
    need(1);
    return embedded_path(params[0]);
  }
  if (family == "cycle") {
    need(1);
    return embedded_cycle(params[0]);
  }
  if (family == "complete") {
    need(1);
    return {complete_graph(params[0]), std::nullopt};
  }
  if (family == "grid") {
    need(2);
    return grid(params[0], params[1]);
  }
  if (family == "triangulated-grid") {
    need(2);
    return triangulated_grid(params[0], params[1]);
  }
  if (family == "forest") {
    need(1);
    return {random_forest(params[0], rng), std::nullopt};
  }
  if (family == "ktree") {
    need(2);
    return {random_ktree(params[0], params[1], rng), std::nullopt};
  }
  if (family == "triangulation") {
    need(1);
    return random_triangulation(params[0], rng);
  }
  if (family == "series-parallel") {
    need(1);
    return random_series_parallel(params[0], rng);
  }
  if (family == "gnp") {
    need(2);
    require(params[1] >= 0 && params[1] <= 100, "gnp edge percentage must lie in 0..100");
    return {random_gnp(params[0], params[1] / 100.0, rng), std::nullopt};
  }
  throw InputError("unknown family '" + family + "'");
}

}  // namespace gcn
