#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcn/decomposition.hpp"
#include "gcn/graph.hpp"
#include "gcn/linear_order.hpp"

namespace gcn {

/// Counter-clockwise cyclic neighbour order per vertex.
using Rotation = std::vector<std::vector<Vertex>>;

enum class EmbeddingCheck { General, Maximal };

/// Combinatorial plane embedding. Faces are traced with
/// next(u->v) = v->pred_v(u), so each face lies to the left of its darts and
/// the outer face runs clockwise.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  int order() const { return static_cast<int>(rotation_.size()); }
  const Rotation& rotation() const { return rotation_; }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  /// Dart whose left face is the outer face; (-1, -1) without edges.
  Edge outer_dart() const { return outer_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  /// Face boundary as the sequence of dart tails.
  const std::vector<Vertex>& face(int f) const { return faces_[f]; }
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  int outer_face() const { return outer_face_; }
  /// Face to the left of dart u->v.
  int face_of(Vertex u, Vertex v) const;

  /// Neighbour after / before u in v's counter-clockwise order.
  Vertex succ(Vertex v, Vertex u) const;
  Vertex pred(Vertex v, Vertex u) const;

  friend PlanarEmbedding validate_embedding(const Graph& g, Rotation rotation, Edge outer, EmbeddingCheck check);

 private:
  int dart(Vertex u, Vertex v) const;

  Rotation rotation_;
  Edge outer_{-1, -1};
  std::vector<int> offset_;                         // first dart of each vertex
  std::vector<std::vector<std::pair<Vertex, int>>> index_;  // sorted (neighbour, slot)
  std::vector<int> dart_face_;
  std::vector<std::vector<Vertex>> faces_;
  int outer_face_ = -1;
};

/// Traces the faces of `rotation` and checks it against `g`: every rotation
/// is a permutation of the neighbourhood, g is connected, and
/// |V| - |E| + |F| = 2. In maximal mode every face must also be a triangle
/// and |E| = 3|V| - 6. Throws EmbeddingError (NotAnEmbedding / NotMaximal);
/// InputError for a disconnected graph or an outer dart that is not an edge.
PlanarEmbedding validate_embedding(const Graph& g, Rotation rotation, Edge outer,
                                   EmbeddingCheck check = EmbeddingCheck::General);

/// Graph whose adjacency is read off a rotation system; throws InputError
/// when the rotation is not symmetric or repeats a neighbour.
Graph graph_from_rotation(const Rotation& rotation);

/// "v: u1 u2 ... uk" per vertex plus "outer: u v"; '#' starts a comment.
struct RotationFile {
  Rotation rotation;
  Edge outer{-1, -1};
};
RotationFile read_rotation(std::istream& in);
RotationFile read_rotation_file(const std::string& path);
std::string to_rotation_text(const PlanarEmbedding& emb);

/// Adds chords inside every non-triangular face (outer face included) until
/// all faces are triangles. Original edges are kept; throws EmbeddingError
/// (CannotTriangulate) when a face admits no simple chord.
std::pair<Graph, PlanarEmbedding> triangulate(const Graph& g, const PlanarEmbedding& emb);

/// Isometric paths decomposition of width at most 2 of a maximal planar
/// graph: the least outer edge, the remaining outer vertex, then per region a
/// shortest path in the enclosed component between the apexes of the two
/// boundary edges joining its two attached paths. Throws ConsistencyError if
/// a region loses that shape.
Decomposition ipd_maximal_planar(const Graph& g, const PlanarEmbedding& emb);

/// Faces as nodes, joined when they share an edge outside the spanning tree.
struct FaceTree {
  std::vector<std::vector<int>> adjacency;  // ascending face ids
  /// Union of the three root paths of the face's corners, sorted.
  std::vector<std::vector<Vertex>> bags;
  /// For every tree edge {f, g} the primal edge they share.
  std::vector<std::pair<std::pair<int, int>, Edge>> edges;
};

/// Throws ConsistencyError when the face graph is not a tree.
FaceTree build_face_tree(const Graph& g, const PlanarEmbedding& emb, const Tree& s);

/// Checks that the bags form a tree-decomposition of g: every vertex and
/// every edge is covered and each vertex's bags induce a subtree.
bool check_tree_decomposition(const Graph& g, const FaceTree& t, std::string* why = nullptr);

/// Order built from a lexicographic BFS tree and a DFS over the face tree.
struct LexBfsOrdering {
  LinearOrder order;
  Tree tree;  // S
  FaceTree faces;
  std::vector<int> face_parent;  // DFS parent in the face tree, -1 at the outer face
  std::vector<int> preorder;     // faces in DFS order
  std::vector<std::vector<Vertex>> face_corners;  // sorted corners per face
  std::vector<int> first_face;   // f(u): first face in DFS order whose bag holds u
  /// Corner of f(u) whose root path holds u; -1 when f(u) is the outer face.
  std::vector<Vertex> corner;
};

/// Outer root paths first (corners ascending, each from the root outward),
/// then a DFS over the face tree from the outer face, visiting neighbours in
/// ascending face id and ordering the single unfinished root path of each
/// face. Throws ConsistencyError if a face has two unfinished paths.
LexBfsOrdering lexbfs_planar_ordering(const Graph& g, const PlanarEmbedding& emb, Vertex root = 0);
LinearOrder lexbfs_planar_order(const Graph& g, const PlanarEmbedding& emb, Vertex root = 0);

/// For every u whose first face is not the outer face: the bag of f(u)
/// precedes every vertex strictly inside the fundamental cycle of the tree
/// edge separating f(u) from its DFS parent (bag vertices excluded).
bool check_carord(const Graph& g, const PlanarEmbedding& emb, const LexBfsOrdering& ord, std::string* why = nullptr);

struct PathBudgetViolation {
  Vertex u = -1;
  int r = 0;
  std::string what;
};

/// Per-vertex budgets of the strong reach under the face-tree order, for u
/// with f(u) not the outer face and corners a, b, c (u on the root path of
/// c, P_u its root path): SReach_r(u) lies in P_a + P_b + P_u, holds at most
/// r+1 vertices of P_u, and at most 2r of P_a - P_u and of P_b - P_u. Outer
/// vertices only get the total 5r+1.
std::vector<PathBudgetViolation> check_path_budgets(const Graph& g, const LexBfsOrdering& ord, int r);

}  // namespace gcn
