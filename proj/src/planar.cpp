#include "gcn/planar.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gcn/error.hpp"
#include "gcn/reachability.hpp"
#include "gcn/traversal.hpp"

namespace gcn {

namespace {

EmbeddingError not_embedding(const std::string& why) {
  return EmbeddingError(EmbeddingError::Kind::NotAnEmbedding, why);
}

// Position of u in the cyclic list, or -1.
int slot_of(const std::vector<Vertex>& cyc, Vertex u) {
  auto it = std::find(cyc.begin(), cyc.end(), u);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

// Inserts w directly after u in the cyclic list.
void insert_after(std::vector<Vertex>& cyc, Vertex u, Vertex w) {
  const int s = slot_of(cyc, u);
  if (s < 0) throw ConsistencyError("rotation lacks neighbour " + std::to_string(u));
  cyc.insert(cyc.begin() + s + 1, w);
}

Vertex cyc_pred(const std::vector<Vertex>& cyc, Vertex u) {
  const int s = slot_of(cyc, u);
  if (s < 0) throw ConsistencyError("rotation lacks neighbour " + std::to_string(u));
  return cyc[(static_cast<std::size_t>(s) + cyc.size() - 1) % cyc.size()];
}

}  // namespace

int PlanarEmbedding::dart(Vertex u, Vertex v) const {
  const auto& idx = index_[u];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(v, -1));
  if (it == idx.end() || it->first != v) throw InputError("no dart " + std::to_string(u) + "->" + std::to_string(v));
  return offset_[u] + it->second;
}

int PlanarEmbedding::face_of(Vertex u, Vertex v) const { return dart_face_[dart(u, v)]; }

Vertex PlanarEmbedding::succ(Vertex v, Vertex u) const {
  const auto& rot = rotation_[v];
  const int s = dart(v, u) - offset_[v];
  return rot[(static_cast<std::size_t>(s) + 1) % rot.size()];
}

Vertex PlanarEmbedding::pred(Vertex v, Vertex u) const {
  const auto& rot = rotation_[v];
  const int s = dart(v, u) - offset_[v];
  return rot[(static_cast<std::size_t>(s) + rot.size() - 1) % rot.size()];
}

PlanarEmbedding validate_embedding(const Graph& g, Rotation rotation, Edge outer, EmbeddingCheck check) {
  const int n = g.order();
  if (n == 0) throw InputError("cannot embed the empty graph");
  if (static_cast<int>(rotation.size()) != n) throw not_embedding("rotation covers a different vertex count");
  if (components(GraphView(g)).size() != 1) throw InputError("embedding needs a connected graph");

  PlanarEmbedding e;
  e.offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  e.index_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw not_embedding("rotation of " + std::to_string(v) + " is not its neighbourhood");
    }
    e.offset_[v + 1] = e.offset_[v] + static_cast<int>(rotation[v].size());
    for (std::size_t s = 0; s < rotation[v].size(); ++s) e.index_[v].emplace_back(rotation[v][s], static_cast<int>(s));
    std::sort(e.index_[v].begin(), e.index_[v].end());
  }
  e.rotation_ = std::move(rotation);
  e.dart_face_.assign(static_cast<std::size_t>(e.offset_[n]), -1);

  if (g.size() == 0) {
    e.faces_ = {{0}};
    e.outer_face_ = 0;
  } else {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : e.rotation_[u]) {
        if (e.dart_face_[e.dart(u, v)] >= 0) continue;
        const int id = static_cast<int>(e.faces_.size());
        std::vector<Vertex> walk;
        Vertex a = u;
        Vertex b = v;
        while (e.dart_face_[e.dart(a, b)] < 0) {
          e.dart_face_[e.dart(a, b)] = id;
          walk.push_back(a);
          Vertex c = e.pred(b, a);
          a = b;
          b = c;
        }
        if (a != u || b != v) throw not_embedding("face walk does not close");
        e.faces_.push_back(std::move(walk));
      }
    }
    if (!g.has_edge(outer.first, outer.second)) throw InputError("outer dart is not an edge");
    e.outer_ = outer;
    e.outer_face_ = e.face_of(outer.first, outer.second);
  }

  const long long euler = static_cast<long long>(n) - static_cast<long long>(g.size()) + e.face_count();
  if (euler != 2) throw not_embedding("Euler characteristic " + std::to_string(euler) + " != 2");
  if (check == EmbeddingCheck::Maximal) {
    const auto kind = EmbeddingError::Kind::NotMaximal;
    if (n < 3) throw EmbeddingError(kind, "maximal planar graphs need 3 vertices");
    if (static_cast<long long>(g.size()) != 3LL * n - 6) throw EmbeddingError(kind, "edge count is not 3n-6");
    for (const auto& f : e.faces_) {
      if (f.size() != 3) throw EmbeddingError(kind, "face of length " + std::to_string(f.size()));
    }
  }
  return e;
}

Graph graph_from_rotation(const Rotation& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : rotation[v]) {
      if (u < 0 || u >= n || u == v) throw InputError("bad neighbour " + std::to_string(u) + " of " + std::to_string(v));
      if (!seen.insert(u).second) throw InputError("rotation of " + std::to_string(v) + " repeats " + std::to_string(u));
      if (slot_of(rotation[u], v) < 0) throw InputError("rotation is not symmetric at " + std::to_string(v));
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return Graph(n, edges);
}

RotationFile read_rotation(std::istream& in) {
  RotationFile out;
  std::vector<std::pair<Vertex, std::vector<Vertex>>> rows;
  std::string line;
  int max_id = -1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError("rotation line without ':': " + line);
    }
    std::string head = line.substr(0, colon);
    std::istringstream rest(line.substr(colon + 1));
    std::vector<Vertex> ids;
    for (int x; rest >> x;) ids.push_back(x);
    if (!rest.eof()) throw InputError("malformed rotation line: " + line);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t\r") + 1);
    if (head == "outer") {
      if (ids.size() != 2) throw InputError("outer needs two vertices");
      out.outer = {ids[0], ids[1]};
      continue;
    }
    Vertex v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(head, &used);
      if (used != head.size() || v < 0) throw InputError("bad vertex");
    } catch (const std::logic_error&) {
      throw InputError("bad vertex label: " + head);
    }
    max_id = std::max(max_id, v);
    for (Vertex u : ids) max_id = std::max(max_id, u);
    rows.emplace_back(v, std::move(ids));
  }
  out.rotation.assign(static_cast<std::size_t>(max_id + 1), {});
  std::vector<std::uint8_t> given(out.rotation.size(), 0);
  for (auto& [v, ids] : rows) {
    if (given[v]) throw InputError("vertex " + std::to_string(v) + " listed twice");
    given[v] = 1;
    out.rotation[v] = std::move(ids);
  }
  return out;
}

RotationFile read_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_rotation(in);
}

std::string to_rotation_text(const PlanarEmbedding& emb) {
  std::ostringstream out;
  for (Vertex v = 0; v < emb.order(); ++v) {
    out << v << ':';
    for (Vertex u : emb.rotation(v)) out << ' ' << u;
    out << '\n';
  }
  if (emb.outer_dart().first >= 0) out << "outer: " << emb.outer_dart().first << ' ' << emb.outer_dart().second << '\n';
  return out.str();
}

std::pair<Graph, PlanarEmbedding> triangulate(const Graph& g, const PlanarEmbedding& emb) {
  const auto cannot = EmbeddingError::Kind::CannotTriangulate;
  if (g.order() < 3) throw EmbeddingError(cannot, "fewer than three vertices");
  Rotation rot = emb.rotation();
  std::set<Edge> edges;
  for (auto e : g.edges()) edges.insert(e);
  auto adjacent = [&](Vertex a, Vertex b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };

  for (const auto& face : emb.faces()) {
    std::vector<Vertex> f = face;
    while (f.size() > 3) {
      const std::size_t s = f.size();
      bool done = false;
      for (std::size_t i = 0; i < s && !done; ++i) {
        const Vertex a = f[i];
        const Vertex b = f[(i + 1) % s];
        const Vertex c = f[(i + 2) % s];
        if (a == c || adjacent(a, c)) continue;
        // Darts a->b->c are consecutive on the face; the chord goes into
        // the corner of a after b and the corner of c before b.
        const Vertex before_b = cyc_pred(rot[c], b);
        insert_after(rot[a], b, c);
        insert_after(rot[c], before_b, a);
        edges.insert({std::min(a, c), std::max(a, c)});
        f.erase(f.begin() + static_cast<std::ptrdiff_t>((i + 1) % s));
        done = true;
      }
      if (!done) throw EmbeddingError(cannot, "face admits no simple chord");
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  Graph out(g.order(), list);
  auto tri = validate_embedding(out, std::move(rot), emb.outer_dart(), EmbeddingCheck::Maximal);
  return {std::move(out), std::move(tri)};
}

// ---------------------------------------------------------------------------

Decomposition ipd_maximal_planar(const Graph& g, const PlanarEmbedding& emb) {
  const int n = g.order();
  if (n < 3) throw InputError("ipd_maximal_planar needs at least three vertices");
  const auto& outer = emb.face(emb.outer_face());
  if (outer.size() != 3) throw EmbeddingError(EmbeddingError::Kind::NotMaximal, "outer face is not a triangle");

  std::vector<Vertex> corners = outer;
  std::sort(corners.begin(), corners.end());
  std::vector<Part> parts;
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
  auto place = [&](Path p) {
    const int q = static_cast<int>(parts.size());
    for (Vertex v : p) {
      part_of[v] = q;
      alive[v] = 0;
    }
    parts.push_back(Part{p, {p}});
  };
  // Least outer edge, then the third corner.
  place({corners[0], corners[1]});
  place({corners[2]});

  // Pending components keyed by smallest vertex.
  std::map<Vertex, std::vector<Vertex>> pending;
  for (auto& c : components(GraphView(g, alive))) pending.emplace(c.front(), std::move(c));

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& comp = node.mapped();
    std::vector<std::uint8_t> in_c(static_cast<std::size_t>(n), 0);
    for (Vertex v : comp) in_c[v] = 1;

    std::set<int> attached;
    std::set<Vertex> contact;
    for (Vertex v : comp) {
      for (Vertex y : g.neighbors(v)) {
        if (part_of[y] >= 0) {
          attached.insert(part_of[y]);
          contact.insert(y);
        }
      }
    }
    if (attached.size() != 2) {
      throw ConsistencyError("region touches " + std::to_string(attached.size()) + " parts instead of two");
    }
    const int pa = *attached.begin();
    const int pb = *attached.rbegin();

    // Boundary edges joining the two paths whose inner triangle reaches C.
    struct Crossing {
      Edge edge;  // (x in P_a, y in P_b)
      Vertex apex;
    };
    std::vector<Crossing> crossings;
    for (Vertex x : parts[pa].vertices) {
      for (Vertex y : g.neighbors(x)) {
        if (part_of[y] != pb) continue;
        for (Vertex apex : {emb.pred(y, x), emb.pred(x, y)}) {
          if (in_c[apex]) crossings.push_back({{x, y}, apex});
        }
      }
    }
    if (crossings.size() != 2) {
      throw ConsistencyError("region has " + std::to_string(crossings.size()) + " boundary edges between its paths");
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& l, const Crossing& r) { return l.edge < r.edge; });

    // Boundary cycle D = P_a[x1..x2] + e2 + P_b[y2..y1] + e1; every contact
    // vertex of C must lie on it.
    std::set<Vertex> boundary;
    auto add_segment = [&](const Path& p, Vertex from, Vertex to) {
      auto i = std::find(p.begin(), p.end(), from) - p.begin();
      auto j = std::find(p.begin(), p.end(), to) - p.begin();
      if (i > j) std::swap(i, j);
      boundary.insert(p.begin() + i, p.begin() + j + 1);
    };
    add_segment(parts[pa].vertices, crossings[0].edge.first, crossings[1].edge.first);
    add_segment(parts[pb].vertices, crossings[0].edge.second, crossings[1].edge.second);
    if (!std::includes(boundary.begin(), boundary.end(), contact.begin(), contact.end())) {
      throw ConsistencyError("component touches a path vertex off its boundary cycle");
    }

    std::vector<std::uint8_t> region(static_cast<std::size_t>(n), 0);
    for (Vertex v : comp) region[v] = 1;
    Path p = shortest_path(GraphView(g, region), crossings[0].apex, crossings[1].apex);
    if (p.empty()) throw ConsistencyError("apexes of a region are not connected");
    place(p);
    for (Vertex v : p) region[v] = 0;
    for (auto& c : components(GraphView(g, region))) pending.emplace(c.front(), std::move(c));
  }
  return Decomposition(n, std::move(parts));
}

// ---------------------------------------------------------------------------

FaceTree build_face_tree(const Graph& g, const PlanarEmbedding& emb, const Tree& s) {
  const int faces = emb.face_count();
  FaceTree t;
  t.adjacency.resize(static_cast<std::size_t>(faces));
  for (auto [u, v] : g.edges()) {
    if (s.parent[u] == v || s.parent[v] == u) continue;
    int f = emb.face_of(u, v);
    int h = emb.face_of(v, u);
    if (f == h) throw ConsistencyError("edge with the same face on both sides");
    t.adjacency[f].push_back(h);
    t.adjacency[h].push_back(f);
    t.edges.push_back({{std::min(f, h), std::max(f, h)}, {u, v}});
  }
  for (auto& a : t.adjacency) std::sort(a.begin(), a.end());
  if (static_cast<int>(t.edges.size()) != faces - 1) throw ConsistencyError("face graph edge count is not |F|-1");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(faces), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int h : t.adjacency[f]) {
      if (!seen[h]) {
        seen[h] = 1;
        ++reached;
        stack.push_back(h);
      }
    }
  }
  if (reached != faces) throw ConsistencyError("face graph is not connected");

  t.bags.resize(static_cast<std::size_t>(faces));
  for (int f = 0; f < faces; ++f) {
    std::set<Vertex> bag;
    for (Vertex c : emb.face(f)) {
      for (Vertex x = c; x != -1; x = s.parent[x]) {
        if (!bag.insert(x).second) break;
      }
    }
    t.bags[f].assign(bag.begin(), bag.end());
  }
  return t;
}

bool check_tree_decomposition(const Graph& g, const FaceTree& t, std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<int>> holders(n);
  for (std::size_t f = 0; f < t.bags.size(); ++f) {
    for (Vertex v : t.bags[f]) holders[v].push_back(static_cast<int>(f));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (holders[v].empty()) return fail("vertex " + std::to_string(v) + " in no bag");
  }
  for (auto [u, v] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(holders[u].begin(), holders[u].end(), holders[v].begin(), holders[v].end(),
                          std::back_inserter(common));
    if (common.empty()) return fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag");
  }
  // A vertex's bags induce a subforest of the tree; it is a subtree exactly
  // when it has one edge fewer than nodes.
  std::vector<int> inner(n, 0);
  for (const auto& [fh, primal] : t.edges) {
    const auto& a = t.bags[fh.first];
    const auto& b = t.bags[fh.second];
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    for (Vertex v : both) ++inner[v];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (inner[v] != static_cast<int>(holders[v].size()) - 1) {
      return fail("bags of vertex " + std::to_string(v) + " are not connected in the tree");
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LexBfsOrdering lexbfs_planar_ordering(const Graph& g, const PlanarEmbedding& emb, Vertex root) {
  g.require_vertex(root);
  const int n = g.order();
  LexBfsOrdering out{LinearOrder::identity(0), lex_bfs_tree(GraphView(g), root), {}, {}, {}, {}, {}, {}};
  for (Vertex v = 0; v < n; ++v) {
    if (!out.tree.spans(v)) throw InputError("graph is not connected");
  }
  out.faces = build_face_tree(g, emb, out.tree);
  const int faces = emb.face_count();
  out.face_corners.resize(static_cast<std::size_t>(faces));
  for (int f = 0; f < faces; ++f) {
    auto& fc = out.face_corners[f];
    fc = emb.face(f);
    std::sort(fc.begin(), fc.end());
    fc.erase(std::unique(fc.begin(), fc.end()), fc.end());
  }

  std::vector<std::uint8_t> ordered(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> seq;
  out.first_face.assign(static_cast<std::size_t>(n), -1);
  out.corner.assign(static_cast<std::size_t>(n), -1);
  auto order_path = [&](Vertex tip) {
    Path p = out.tree.root_path(tip);
    std::vector<Vertex> fresh;
    for (Vertex x : p) {
      if (!ordered[x]) fresh.push_back(x);
    }
    for (Vertex x : fresh) {
      ordered[x] = 1;
      seq.push_back(x);
    }
    return fresh;
  };

  const int outer = emb.outer_face();
  const auto& outer_corners = out.face_corners[outer];
  for (Vertex c : outer_corners) order_path(c);

  // Depth-first search over the face tree, neighbours ascending.
  out.face_parent.assign(static_cast<std::size_t>(faces), -1);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(faces), 0);
  std::vector<std::pair<int, std::size_t>> stack{{outer, 0}};
  seen[outer] = 1;
  out.preorder.push_back(outer);
  while (!stack.empty()) {
    auto& [f, next] = stack.back();
    if (next == out.faces.adjacency[f].size()) {
      stack.pop_back();
      continue;
    }
    const int h = out.faces.adjacency[f][next++];
    if (seen[h]) continue;
    seen[h] = 1;
    out.face_parent[h] = f;
    out.preorder.push_back(h);
    stack.push_back({h, 0});
  }

  for (int f : out.preorder) {
    for (Vertex v : out.faces.bags[f]) {
      if (out.first_face[v] < 0) out.first_face[v] = f;
    }
    if (f == outer) continue;
    const auto& corners = out.face_corners[f];
    Vertex open = -1;
    for (Vertex c : corners) {
      if (ordered[c]) continue;  // root paths are ancestor-closed once ordered
      if (open >= 0) throw ConsistencyError("face " + std::to_string(f) + " has two unordered root paths");
      open = c;
    }
    if (open >= 0) {
      for (Vertex x : order_path(open)) out.corner[x] = open;
    }
  }
  if (static_cast<int>(seq.size()) != n) throw ConsistencyError("face-tree order missed vertices");
  out.order = LinearOrder(std::move(seq));
  return out;
}

LinearOrder lexbfs_planar_order(const Graph& g, const PlanarEmbedding& emb, Vertex root) {
  return lexbfs_planar_ordering(g, emb, root).order;
}

namespace {

// Ancestor queries on the spanning tree via entry/exit times.
class AncestorIndex {
 public:
  explicit AncestorIndex(const Tree& t) : tin_(t.parent.size(), 0), tout_(t.parent.size(), 0) {
    std::vector<std::vector<Vertex>> children(t.parent.size());
    for (Vertex v : t.order) {
      if (t.parent[v] >= 0) children[t.parent[v]].push_back(v);
    }
    int clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
    tin_[t.root] = clock++;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == children[v].size()) {
        tout_[v] = clock++;
        stack.pop_back();
        continue;
      }
      Vertex c = children[v][i++];
      tin_[c] = clock++;
      stack.push_back({c, 0});
    }
  }
  // True iff a lies on the root path of b.
  bool on_root_path(Vertex a, Vertex b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }

 private:
  std::vector<int> tin_;
  std::vector<int> tout_;
};

}  // namespace

bool check_carord(const Graph& g, const PlanarEmbedding& emb, const LexBfsOrdering& ord, std::string* why) {
  const int faces = emb.face_count();
  const int outer = emb.outer_face();
  const Tree& s = ord.tree;
  std::vector<int> pre_index(static_cast<std::size_t>(faces), 0);
  for (std::size_t i = 0; i < ord.preorder.size(); ++i) pre_index[ord.preorder[i]] = static_cast<int>(i);
  // Subtree sizes in the DFS tree give contiguous preorder ranges.
  std::vector<int> subtree(static_cast<std::size_t>(faces), 1);
  for (auto it = ord.preorder.rbegin(); it != ord.preorder.rend(); ++it) {
    if (ord.face_parent[*it] >= 0) subtree[ord.face_parent[*it]] += subtree[*it];
  }
  std::map<std::pair<int, int>, Edge> shared;
  for (const auto& [fh, e] : ord.faces.edges) shared[fh] = e;

  std::set<int> targets;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (ord.first_face[u] != outer) targets.insert(ord.first_face[u]);
  }
  for (int f : targets) {
    const int parent = ord.face_parent[f];
    const Edge e = shared.at({std::min(f, parent), std::max(f, parent)});
    // Fundamental cycle of e in S.
    std::set<Vertex> cycle;
    Vertex x = e.first;
    Vertex y = e.second;
    while (x != y) {
      if (s.depth[x] >= s.depth[y]) {
        cycle.insert(x);
        x = s.parent[x];
      } else {
        cycle.insert(y);
        y = s.parent[y];
      }
    }
    cycle.insert(x);
    const auto& bag = ord.faces.bags[f];
    int bag_max = -1;
    for (Vertex v : bag) bag_max = std::max(bag_max, ord.order.position(v));
    for (int i = pre_index[f]; i < pre_index[f] + subtree[f]; ++i) {
      for (Vertex v : emb.face(ord.preorder[i])) {
        if (cycle.count(v) || std::binary_search(bag.begin(), bag.end(), v)) continue;
        if (ord.order.position(v) < bag_max) {
          if (why) *why = "vertex " + std::to_string(v) + " inside the cycle of face " + std::to_string(f) +
                          " precedes its bag";
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<PathBudgetViolation> check_path_budgets(const Graph& g, const LexBfsOrdering& ord, int r) {
  std::vector<PathBudgetViolation> out;
  const AncestorIndex anc(ord.tree);
  const int outer_face = ord.preorder.empty() ? -1 : ord.preorder.front();
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto reach = sreach(g, ord.order, u, r);
    if (static_cast<int>(reach.size()) > 5 * r + 1) out.push_back({u, r, "total exceeds 5r+1"});
    if (ord.first_face[u] == outer_face) continue;
    const Vertex c = ord.corner[u];
    std::vector<Vertex> sides;
    for (Vertex x : ord.face_corners[ord.first_face[u]]) {
      if (x != c) sides.push_back(x);
    }
    if (c < 0 || sides.size() != 2 || !anc.on_root_path(u, c)) {
      out.push_back({u, r, "vertex is not on the open root path of its first face"});
      continue;
    }
    int on_pu = 0;
    int on_a = 0;
    int on_b = 0;
    for (Vertex z : reach) {
      const bool in_pu = anc.on_root_path(z, u);
      const bool in_a = anc.on_root_path(z, sides[0]);
      const bool in_b = anc.on_root_path(z, sides[1]);
      if (in_pu) ++on_pu;
      if (in_a && !in_pu) ++on_a;
      if (in_b && !in_pu) ++on_b;
      if (!in_pu && !in_a && !in_b) out.push_back({u, r, "reaches " + std::to_string(z) + " outside P_a, P_b, P_u"});
    }
    if (on_pu > r + 1) out.push_back({u, r, "more than r+1 vertices on P_u"});
    if (on_a > 2 * r) out.push_back({u, r, "more than 2r vertices on P_a - P_u"});
    if (on_b > 2 * r) out.push_back({u, r, "more than 2r vertices on P_b - P_u"});
  }
  return out;
}

}  // namespace gcn
