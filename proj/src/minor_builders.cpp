#include "gcn/minor_builders.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gcn/error.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

namespace {

using json = nlohmann::ordered_json;

// Work list of residual components keyed by their smallest vertex.
template <class Payload>
using Pending = std::map<Vertex, std::pair<std::vector<Vertex>, Payload>>;

std::vector<std::uint8_t> membership(int n, const std::vector<Vertex>& set) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

// Components of comp minus the placed vertices, smallest vertex first.
std::vector<std::vector<Vertex>> split(const Graph& g, const std::vector<Vertex>& comp,
                                       const std::vector<int>& part_of) {
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : comp) {
    if (part_of[v] < 0) alive[v] = 1;
  }
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : comp) {
    if (!alive[s]) continue;
    std::vector<Vertex> c{s};
    alive[s] = 0;
    for (std::size_t head = 0; head < c.size(); ++head) {
      for (Vertex y : g.neighbors(c[head])) {
        if (alive[y]) {
          alive[y] = 0;
          c.push_back(y);
        }
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool touches(const Graph& g, Vertex x, const std::vector<std::uint8_t>& in) {
  for (Vertex y : g.neighbors(x)) {
    if (in[y]) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

SpreadFunction kt_spread(int t) { return SpreadFunction::affine(t - 3); }

KtResult kt_flat_decomposition(const Graph& g, int t) {
  if (t < 4) throw InputError("kt_flat_decomposition needs t >= 4");
  if (g.order() == 0) throw InputError("kt_flat_decomposition needs a non-empty graph");
  const int n = g.order();
  KtResult result;
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  std::vector<Part> parts;
  std::vector<std::set<int>> part_adj;
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);

  Pending<std::vector<int>> pending;
  for (auto& c : components(GraphView(g))) {
    Vertex key = c.front();
    pending.emplace(key, std::make_pair(std::move(c), std::vector<int>{}));
  }

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& comp = node.mapped().first;
    const auto& attached = node.mapped().second;

    Part part;
    if (attached.empty()) {
      part.vertices = {comp.front()};
      part.paths = {{comp.front()}};
    } else {
      auto adjacent_to = [&](int q) {
        for (Vertex v : comp) {
          for (Vertex y : g.neighbors(v)) {
            if (part_of[y] == q) return v;
          }
        }
        throw ConsistencyError("attached part without an edge into its component");
      };
      const Vertex root = adjacent_to(attached.front());
      Tree tree = bfs_tree(GraphView(g, alive), root);
      std::set<Vertex> seen;
      for (std::size_t i = 1; i < attached.size(); ++i) {
        Path p = tree.root_path(adjacent_to(attached[i]));
        for (Vertex v : p) {
          if (seen.insert(v).second) part.vertices.push_back(v);
        }
        part.paths.push_back(std::move(p));
      }
      if (part.paths.empty()) {
        part.vertices = {root};
        part.paths = {{root}};
      }
    }

    const int q = static_cast<int>(parts.size());
    std::set<int> adj;
    for (Vertex v : part.vertices) {
      part_of[v] = q;
      alive[v] = 0;
    }
    for (Vertex v : part.vertices) {
      for (Vertex y : g.neighbors(v)) {
        if (part_of[y] >= 0 && part_of[y] != q) adj.insert(part_of[y]);
      }
    }
    for (int p : adj) part_adj[p].insert(q);
    part_adj.push_back(std::move(adj));
    result.path_counts.push_back(static_cast<int>(part.paths.size()));
    parts.push_back(std::move(part));

    for (auto& next : split(g, comp, part_of)) {
      std::set<int> seen_parts;
      for (Vertex v : next) {
        for (Vertex y : g.neighbors(v)) {
          if (part_of[y] >= 0) seen_parts.insert(part_of[y]);
        }
      }
      std::vector<int> att(seen_parts.begin(), seen_parts.end());
      for (std::size_t a = 0; a < att.size(); ++a) {
        for (std::size_t b = a + 1; b < att.size(); ++b) {
          if (!part_adj[att[a]].count(att[b])) throw ConsistencyError("attached parts do not form a clique model");
        }
      }
      if (static_cast<int>(att.size()) >= t - 1) {
        MinorModel model;
        for (int p : att) {
          if (static_cast<int>(model.branch_sets.size()) == t - 1) break;
          auto set = parts[p].vertices;
          std::sort(set.begin(), set.end());
          model.branch_sets.push_back(std::move(set));
        }
        model.branch_sets.push_back(next);
        std::vector<Edge> clique;
        for (int a = 0; a < t; ++a) {
          for (int b = a + 1; b < t; ++b) clique.emplace_back(a, b);
        }
        std::string why;
        if (!is_minor_model(g, Graph(t, clique), model, &why)) throw ConsistencyError("K_t certificate invalid: " + why);
        result.certificate = std::move(model);
        result.path_counts.clear();
        return result;
      }
      Vertex key = next.front();
      pending.emplace(key, std::make_pair(std::move(next), std::move(att)));
    }
  }
  result.decomposition = Decomposition(n, std::move(parts));
  return result;
}

// ---------------------------------------------------------------------------

int MinorModelState::model_vertex_count() const {
  return static_cast<int>(std::count(present.begin(), present.end(), std::uint8_t{1}));
}

json MinorModelState::summary() const {
  json out;
  json verts = json::array();
  for (std::size_t i = 0; i < present.size(); ++i) {
    if (present[i]) verts.push_back(i);
  }
  json edge_list = json::array();
  for (const auto& [key, e] : edges) edge_list.push_back(json::array({key.first, key.second}));
  out["vertices"] = std::move(verts);
  out["edges"] = std::move(edge_list);
  return out;
}

ApexSplit split_apex(const Graph& H, Vertex apex) {
  if (!H.contains(apex)) throw InputError("apex " + std::to_string(apex) + " is not a vertex of H");
  ApexSplit out;
  std::vector<int> index(static_cast<std::size_t>(H.order()), -1);
  for (Vertex v = 0; v < H.order(); ++v) {
    if (v == apex) continue;
    index[v] = static_cast<int>(out.to_h.size());
    out.to_h.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : H.edges()) {
    if (a != apex && b != apex) edges.emplace_back(index[a], index[b]);
  }
  out.rest = Graph(static_cast<int>(out.to_h.size()), edges);
  out.h = static_cast<int>(edges.size());
  for (Vertex v = 0; v < out.rest.order(); ++v) {
    if (out.rest.degree(v) == 0) ++out.alpha;
  }
  return out;
}

bool validate_model_state(const Graph& g, const Graph& rest, const std::vector<int>& part_of,
                          const MinorModelState& s, std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const int k = rest.order();
  if (static_cast<int>(s.present.size()) != k || static_cast<int>(s.vertex_models.size()) != k) {
    return fail("state sized for a different H");
  }
  const auto in_c = membership(g.order(), s.component);
  for (Vertex v : s.component) {
    if (part_of[v] >= 0) return fail("component vertex " + std::to_string(v) + " already placed");
  }
  if (s.model_vertex_count() == k && s.edges.size() == rest.size()) return fail("M is all of H - apex");

  // Ownership: vertex models and edge interiors must be disjoint.
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) {
    const auto& model = s.vertex_models[i];
    if (!s.present[i]) {
      if (!model.empty()) return fail("absent h_" + std::to_string(i) + " keeps a model");
      continue;
    }
    if (model.empty()) return fail("empty model for h_" + std::to_string(i));
    for (Vertex x : model) {
      if (part_of[x] < 0) return fail("condition 1: model vertex " + std::to_string(x) + " not placed");
      if (owner[x] != -1) return fail("models overlap at " + std::to_string(x));
      owner[x] = i;
    }
    if (!is_connected_set(g, model)) return fail("model of h_" + std::to_string(i) + " not connected");
  }

  // Condition 2.
  for (const auto& [key, v] : s.pebbles) {
    if (key.first < 0 || key.first >= k || !s.present[key.first]) return fail("pebble of an absent vertex");
    if (!rest.has_edge(key.first, key.second)) return fail("pebble for a non-edge");
    if (owner[v] != key.first) return fail("pebble outside its model");
  }
  for (int i = 0; i < k; ++i) {
    if (!s.present[i]) continue;
    if (rest.degree(i) == 0) {
      if (s.vertex_models[i].size() != 1) return fail("condition 2: isolated h_" + std::to_string(i) + " model size");
      continue;
    }
    std::set<Vertex> pebbled;
    for (Vertex j : rest.neighbors(i)) {
      auto it = s.pebbles.find({i, j});
      if (it == s.pebbles.end()) return fail("condition 2: missing pebble");
      pebbled.insert(it->second);
    }
    std::set<Vertex> contact;
    for (Vertex x : s.vertex_models[i]) {
      if (touches(g, x, in_c)) contact.insert(x);
    }
    if (pebbled != contact) return fail("condition 2: pebbles of h_" + std::to_string(i) + " differ from contacts");
  }

  // Condition 3.
  std::set<int> used_parts;
  for (const auto& [key, e] : s.edges) {
    const auto [i, j] = key;
    const std::string name = "e_" + std::to_string(i) + "_" + std::to_string(j);
    if (!(i < j) || j >= k || !s.present[i] || !s.present[j]) return fail(name + " joins absent vertices");
    if (!rest.has_edge(i, j)) return fail(name + " is not an edge of H - apex");
    if (e.path.size() < 2 || !is_path(GraphView(g), e.path)) return fail(name + " model is not a path");
    if (e.path.front() != s.pebbles.at({i, j}) || e.path.back() != s.pebbles.at({j, i})) {
      return fail("condition 3(a): " + name + " endpoints not pebbled");
    }
    if (e.path.size() > 2) {
      for (std::size_t x = 1; x + 1 < e.path.size(); ++x) {
        const Vertex w = e.path[x];
        if (part_of[w] < 0 || part_of[w] != e.part) return fail("condition 3(b): " + name + " leaves its part");
        if (owner[w] != -1) return fail(name + " interior overlaps a model");
        owner[w] = k + 1;
      }
      if (!used_parts.insert(e.part).second) return fail("condition 3(c): part shared by two edge models");
    }
    if (!e.isometric_at_creation) return fail("condition 3(d): " + name + " was not isometric");
  }

  // Condition 4.
  for (Vertex v : s.component) {
    for (Vertex y : g.neighbors(v)) {
      if (part_of[y] >= 0 && owner[y] == -1) {
        return fail("condition 4: placed vertex " + std::to_string(y) + " touches C outside the model");
      }
    }
  }
  return true;
}

MinorModelState reestablish_invariants(const Graph& g, const Graph& rest, MinorModelState state,
                                       const std::vector<Vertex>& next, ReestablishLog* log) {
  ReestablishLog local;
  ReestablishLog& out = log ? *log : local;
  const auto in_next = membership(g.order(), next);
  auto contact = [&](Vertex x) { return touches(g, x, in_next); };
  const int k = rest.order();

  for (int i = 0; i < k; ++i) {
    if (!state.present[i]) continue;
    auto& model = state.vertex_models[i];
    for (Vertex j : rest.neighbors(i)) {
      const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
      auto it = state.edges.find(key);
      if (it == state.edges.end()) continue;
      Vertex& pebble = state.pebbles.at({i, j});
      if (contact(pebble)) continue;
      Path w = it->second.path;
      if (i > j) std::reverse(w.begin(), w.end());
      // The far endpoint belongs to H_j, so the search stops before it.
      const std::size_t s = w.size();
      std::size_t x = s - 2;
      for (std::size_t idx = 1; idx + 1 < s; ++idx) {
        if (contact(w[idx])) {
          x = idx;
          break;
        }
      }
      for (std::size_t idx = 1; idx <= x; ++idx) model.push_back(w[idx]);
      out.absorbed += static_cast<int>(x);
      pebble = w[x];
      if (contact(w[x])) {
        Path trimmed(w.begin() + static_cast<std::ptrdiff_t>(x), w.end());
        if (i > j) std::reverse(trimmed.begin(), trimmed.end());
        it->second.path = std::move(trimmed);
      } else {
        state.edges.erase(it);
        out.deleted_edges.push_back(key);
      }
    }

    Vertex first_contact = -1;
    for (Vertex x : model) {
      if (contact(x) && (first_contact < 0 || x < first_contact)) first_contact = x;
    }
    if (first_contact < 0) {
      state.present[i] = 0;
      model.clear();
      for (Vertex j : rest.neighbors(i)) {
        state.pebbles.erase({i, j});
        const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
        if (state.edges.erase(key)) out.deleted_edges.push_back(key);
      }
      out.deleted_vertices.push_back(i);
      continue;
    }
    for (Vertex j : rest.neighbors(i)) {
      Vertex& pebble = state.pebbles.at({i, j});
      if (!contact(pebble)) pebble = first_contact;
    }
  }
  state.component = next;
  return state;
}

Decomposition BuilderTrace::replay(int n) const {
  std::vector<Part> parts;
  for (const auto& step : steps) {
    Part p;
    p.vertices = step.at("path").get<std::vector<Vertex>>();
    p.paths = {p.vertices};
    parts.push_back(std::move(p));
  }
  return Decomposition(n, std::move(parts));
}

long long h_ipd_strong_bound(int h, int alpha, int r) { return static_cast<long long>(h) * (2LL * r + 1) + alpha; }

namespace {

// Shortest path in G[C] from some C-neighbour of `a` to some C-neighbour of
// `b`; among closest pairs the smallest target id wins, and BFS parents go to
// the earliest discovery (sources in ascending order).
Path closest_connection(const Graph& g, const std::vector<std::uint8_t>& in_c, Vertex a, Vertex b) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::deque<Vertex> queue;
  for (Vertex y : g.neighbors(a)) {
    if (in_c[y]) {
      dist[y] = 0;
      queue.push_back(y);
    }
  }
  std::vector<std::uint8_t> target(n, 0);
  for (Vertex y : g.neighbors(b)) {
    if (in_c[y]) target[y] = 1;
  }
  Vertex best = -1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (best >= 0 && dist[x] > dist[best]) break;
    if (target[x] && (best < 0 || x < best)) best = x;
    for (Vertex y : g.neighbors(x)) {
      if (in_c[y] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (best < 0) throw ConsistencyError("pebbled models not joined through the component");
  Path p;
  for (Vertex x = best; x >= 0; x = parent[x]) p.push_back(x);
  std::reverse(p.begin(), p.end());
  return p;
}

// Condition 3(d): the edge model is a shortest path in G[C + endpoints]
// minus the edge joining the endpoints.
bool isometric_in_region(const Graph& g, std::vector<std::uint8_t> region, const Path& e) {
  const Vertex a = e.front();
  const Vertex b = e.back();
  region[a] = region[b] = 1;
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!region[y] || dist[y] >= 0) continue;
      if ((x == a && y == b) || (x == b && y == a)) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return is_path(GraphView(g), e) && dist[b] == static_cast<int>(e.size()) - 1;
}

}  // namespace

HIpdResult h_ipd(const Graph& g, const Graph& H, Vertex apex, const HIpdOptions& options) {
  if (g.order() == 0) throw InputError("h_ipd needs a non-empty graph");
  const ApexSplit split_h = split_apex(H, apex);
  const Graph& rest = split_h.rest;
  const int k = rest.order();
  const int n = g.order();

  HIpdResult result;
  result.h = split_h.h;
  result.alpha = split_h.alpha;

  auto certificate = [&](const MinorModelState& s, const std::vector<Vertex>& apex_set) {
    MinorModel model;
    model.branch_sets.resize(static_cast<std::size_t>(H.order()));
    for (int i = 0; i < k; ++i) model.branch_sets[split_h.to_h[i]] = s.vertex_models[i];
    for (const auto& [key, e] : s.edges) {
      auto& set = model.branch_sets[split_h.to_h[key.first]];
      for (std::size_t x = 1; x + 1 < e.path.size(); ++x) set.push_back(e.path[x]);
    }
    model.branch_sets[apex] = apex_set;
    for (auto& set : model.branch_sets) std::sort(set.begin(), set.end());
    std::string why;
    if (!is_minor_model(g, H, model, &why)) throw ConsistencyError("H certificate invalid: " + why);
    return model;
  };

  if (k == 0) {
    result.certificate = certificate(MinorModelState{}, {0});
    return result;
  }

  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  std::vector<Part> parts;
  Pending<std::optional<MinorModelState>> pending;
  for (auto& c : components(GraphView(g))) {
    Vertex key = c.front();
    pending.emplace(key, std::make_pair(std::move(c), std::nullopt));
  }

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& comp = node.mapped().first;
    auto& incoming = node.mapped().second;
    const int q = static_cast<int>(parts.size());

    json step;
    step["part"] = q;
    step["component"] = json{{"min", comp.front()}, {"size", comp.size()}};
    MinorModelState state;
    Path path;
    if (!incoming) {
      path = {comp.front()};
      state.component = comp;
      state.present.assign(static_cast<std::size_t>(k), 0);
      state.vertex_models.assign(static_cast<std::size_t>(k), {});
      state.present[0] = 1;
      state.vertex_models[0] = path;
      for (Vertex j : rest.neighbors(0)) state.pebbles[{0, j}] = path.front();
      step["case"] = "start";
      step["model_vertex"] = 0;
    } else {
      state = std::move(*incoming);
      std::optional<Edge> pair;
      for (auto [i, j] : rest.edges()) {
        if (state.present[i] && state.present[j] && !state.edges.count({i, j})) {
          pair = Edge{i, j};
          break;
        }
      }
      if (pair) {
        const auto [i, j] = *pair;
        const Vertex vij = state.pebbles.at({i, j});
        const Vertex vji = state.pebbles.at({j, i});
        const auto in_c = membership(n, comp);
        path = closest_connection(g, in_c, vij, vji);
        EdgeModel e;
        e.path.push_back(vij);
        e.path.insert(e.path.end(), path.begin(), path.end());
        e.path.push_back(vji);
        e.part = q;
        e.isometric_at_creation = isometric_in_region(g, in_c, e.path);
        step["case"] = "edge";
        step["pair"] = json::array({i, j});
        step["isometric"] = e.isometric_at_creation;
        state.edges.emplace(std::make_pair(i, j), std::move(e));
      } else {
        int a = 0;
        while (a < k && state.present[a]) ++a;
        if (a == k) throw ConsistencyError("M reached H - apex without a certificate");
        path = {comp.front()};
        state.present[a] = 1;
        state.vertex_models[a] = path;
        for (Vertex j : rest.neighbors(a)) state.pebbles[{a, j}] = path.front();
        step["case"] = "vertex";
        step["model_vertex"] = a;
      }
    }
    step["path"] = path;

    for (Vertex v : path) part_of[v] = q;
    parts.push_back(Part{path, {path}});

    json children = json::array();
    for (auto& next : split(g, comp, part_of)) {
      ReestablishLog log;
      MinorModelState child = reestablish_invariants(g, rest, state, next, &log);
      if (options.validate) {
        std::string why;
        if (!validate_model_state(g, rest, part_of, child, &why) &&
            !(child.model_vertex_count() == k && child.edges.size() == rest.size())) {
          throw ConsistencyError("model invariants broken after part " + std::to_string(q) + ": " + why);
        }
      }
      json record{{"min", next.front()},
                  {"size", next.size()},
                  {"deleted_vertices", log.deleted_vertices},
                  {"deleted_edges", log.deleted_edges},
                  {"absorbed", log.absorbed},
                  {"model", child.summary()}};
      const bool complete = child.model_vertex_count() == k && child.edges.size() == rest.size();
      if (complete) {
        record["certificate"] = true;
        children.push_back(std::move(record));
        step["children"] = std::move(children);
        result.trace.steps.push_back(std::move(step));
        result.certificate = certificate(child, next);
        return result;
      }
      if (options.observer) options.observer(part_of, child);
      children.push_back(std::move(record));
      Vertex key = next.front();
      pending.emplace(key, std::make_pair(std::move(next), std::optional<MinorModelState>(std::move(child))));
    }
    step["children"] = std::move(children);
    result.trace.steps.push_back(std::move(step));
  }
  result.decomposition = Decomposition(n, std::move(parts));
  return result;
}

}  // namespace gcn
