#ifndef TFPC_PLANE_GRAPH_HPP
#define TFPC_PLANE_GRAPH_HPP

#include "tfpc/error.hpp"

#include <optional>
#include <vector>

namespace tfpc {

using VertexId = int;

/// One orbit of the face traversal: a closed boundary walk.
struct Face {
  int id = -1;
  std::vector<VertexId> boundary;  // cyclic vertex sequence of the walk
  int length = 0;                  // number of directed edges in the walk
};

/// A cycle of the graph together with its relation to the chosen outer face.
struct CycleRef {
  std::vector<VertexId> vertices;  // canonical cyclic sequence
  bool separating = false;         // both open sides contain a vertex
  std::vector<VertexId> interior;  // vertices strictly on the side away from the outer face
};

/// Plane graph given by a rotation system (clockwise neighbor order per
/// vertex) with a distinguished outer face.  Immutable after construction.
///
/// Faces are the orbits of the traversal rule next(u->v) = (v, w) where w
/// follows u in the rotation of v.  For disconnected graphs the designated
/// outer walks of the secondary components count as part of the outer face,
/// which keeps n - e + f = 1 + c.
class PlaneGraph {
public:
  static PlaneGraph build(int vertex_count, std::vector<std::vector<VertexId>> rotations,
                          std::optional<int> outer_face_hint = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return e_; }
  int component_count() const { return components_; }
  int face_count() const { return face_count_; }
  int outer_face() const { return outer_face_; }

  const std::vector<std::vector<VertexId>>& rotations() const { return rot_; }
  const std::vector<VertexId>& rotation(VertexId v) const { return rot_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;  // u < v, sorted

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  /// Face ids merged into the outer face (other components' outer walks).
  const std::vector<int>& outer_merged() const { return outer_merged_; }
  bool face_in_outer(int id) const;
  /// Lengths per *merged* face; index 0-based over faces(), merged walks
  /// report 0 and their length is accounted to the outer face.
  int merged_face_length(int id) const;

  /// Face on the left of the directed edge (u -> v) under the traversal rule.
  int face_of_directed_edge(VertexId u, VertexId v) const;
  std::vector<int> faces_at(VertexId v) const;
  bool on_face(VertexId v, int face_id) const;
  bool on_outer_face(VertexId v) const;

  std::optional<int> girth() const;
  bool has_triangle() const;

  /// All simple cycles of the exact length, canonical order, deterministic.
  std::vector<std::vector<VertexId>> cycles_of_length(int len) const;
  std::vector<std::vector<VertexId>> cycles_through(VertexId v, int len) const;

  /// Classifies a cycle: interior = side away from the outer face.
  CycleRef make_cycle_ref(const std::vector<VertexId>& cycle) const;
  std::vector<int> interior_faces(const std::vector<VertexId>& cycle) const;
  std::vector<CycleRef> find_separating_cycles(int len) const;

  /// Same embedding, different distinguished outer face.
  PlaneGraph with_outer_face(int face_id) const;

  /// True when the outer face boundary is a simple cycle.
  bool outer_is_cycle() const;
  std::vector<VertexId> outer_cycle() const;  // throws BadOuterFace when not a cycle

  struct Sub {
    PlaneGraph graph;
    std::vector<VertexId> to_parent;    // new id -> old id
    std::vector<int> from_parent;       // old id -> new id or -1
  };
  /// Induced plane subgraph on `verts` (rotation order inherited).
  Sub induced(const std::vector<VertexId>& verts,
              std::optional<int> outer_face_hint = std::nullopt) const;
  /// Induced subgraph keeping only the given edges (u < v pairs).
  Sub subgraph(const std::vector<VertexId>& verts,
               const std::vector<std::pair<VertexId, VertexId>>& keep_edges,
               std::optional<int> outer_face_hint = std::nullopt) const;

  static std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle);

  /// The undirected edge (a,b) lies on the outer face boundary.
  bool edge_on_outer(VertexId a, VertexId b) const;
  /// p is a subpath of the outer face boundary (distinct vertices).
  bool outer_subpath(const std::vector<VertexId>& p) const;

private:
  PlaneGraph() = default;
  void compute_faces();

  int n_ = 0;
  int e_ = 0;
  int components_ = 1;
  int face_count_ = 0;
  int outer_face_ = 0;
  std::vector<std::vector<VertexId>> rot_;
  std::vector<Face> faces_;
  std::vector<int> outer_merged_;
  std::vector<std::vector<int>> face_at_slot_;  // face id of (v, rot_[v][i])
};

}  // namespace tfpc

#endif
