#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "facehit/errors.hpp"

namespace facehit {

using VertexId = int;
using EdgeId = int;

/// Undirected edge; `u` is the tail of the positive dart, `v` of the negative
/// one.  Self-loops (u == v) are representable.
struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
};

/// A dart named by its edge and direction, as it appears in input text.
struct DartRef {
  EdgeId edge;
  bool positive;
  friend bool operator==(const DartRef& a, const DartRef& b) {
    return a.edge == b.edge && a.positive == b.positive;
  }
};

/// Where a connected component sits: at the root of the nesting forest
/// (touching the unbounded region) or inside a local face of another
/// component.
struct AnchorSpec {
  bool root = true;
  int parent_component = -1;
  int parent_local_face = -1;  // index within the parent component
};

/// Raw description of a plane multigraph: everything `build_graph` needs.
/// Component indices (for anchors and outer faces) refer to components
/// ordered by their smallest vertex id; local face indices refer to trace
/// order within a component.
struct GraphData {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<VertexId, std::vector<DartRef>> rotations;  // counterclockwise
  std::map<int, AnchorSpec> anchors;                   // default: root
  std::map<int, int> outer_faces;                      // default: local face 0
};

/// One orbit of the face-successor permutation inside a single component.
/// An isolated vertex owns a single zero-length face carrying `lone_vertex`.
struct LocalFace {
  int component = 0;
  int index_in_component = 0;
  std::vector<int> walk;  // darts in trace order; empty for isolated vertex
  VertexId lone_vertex = -1;
};

/// One closed boundary walk of a global face.  Zero-length walks mark
/// isolated vertices lying in the face.
struct FaceWalk {
  std::vector<int> darts;
  VertexId lone_vertex = -1;
};

/// A face of the whole plane arrangement: local faces of several components
/// merged according to the nesting forest.
struct GlobalFace {
  int id = 0;
  std::vector<FaceWalk> walks;      // ordered by contributing local face
  int length = 0;                   // total number of darts over all walks
  std::vector<VertexId> boundary;   // V(f): sorted, distinct
};

/// Immutable plane multigraph represented as a rotation system.
///
/// Darts are dense ints: the edge at sorted position k owns darts 2k
/// (positive, u -> v) and 2k+1 (negative); twin(d) == d ^ 1.  The face
/// successor of d is the dart after twin(d) in the rotation at head(d).
class PlaneMultigraph {
 public:
  PlaneMultigraph() = default;

  // --- vertices / edges -------------------------------------------------
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<VertexId>& vertex_ids() const { return verts_; }
  bool has_vertex(VertexId v) const { return vidx_.count(v) != 0; }
  int vertex_index(VertexId v) const;

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(EdgeId e) const { return eidx_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;

  // --- darts -------------------------------------------------------------
  int dart_count() const { return static_cast<int>(tail_.size()); }
  static int twin(int d) { return d ^ 1; }
  VertexId dart_tail(int d) const { return verts_[tail_[d]]; }
  VertexId dart_head(int d) const { return verts_[tail_[d ^ 1]]; }
  EdgeId dart_edge_id(int d) const { return edges_[d >> 1].id; }
  bool dart_positive(int d) const { return (d & 1) == 0; }
  DartRef dart_ref(int d) const { return DartRef{dart_edge_id(d), dart_positive(d)}; }
  int dart_of(EdgeId e, bool positive) const;

  const std::vector<int>& rotation(VertexId v) const;
  int rot_next(int d) const { return rot_next_[d]; }
  int rot_prev(int d) const { return rot_prev_[d]; }
  /// Face successor: the dart after twin(d) in the rotation at head(d).
  int face_next(int d) const { return rot_next_[d ^ 1]; }
  int face_prev(int d) const { return rot_prev_[d] ^ 1; }

  // --- components and nesting -------------------------------------------
  int component_count() const { return n_comps_; }
  int component_of(VertexId v) const { return comp_of_vertex_[vertex_index(v)]; }
  const std::vector<VertexId>& component_vertices(int c) const { return comp_verts_[c]; }
  const AnchorSpec& anchor(int c) const { return anchors_[c]; }
  int outer_local_face(int c) const { return outer_lf_[c]; }

  // --- faces ---------------------------------------------------------------
  const std::vector<LocalFace>& local_faces() const { return lfaces_; }
  /// Global id (index into local_faces()) of the local face (c, idx).
  int local_face_id(int component, int index_in_component) const;
  int local_face_of_dart(int d) const { return lface_of_dart_[d]; }
  int local_face_count(int component) const {
    return static_cast<int>(comp_lfaces_[component].size());
  }

  const std::vector<GlobalFace>& global_faces() const { return gfaces_; }
  int global_face_of_local(int lface_id) const { return gface_of_lface_[lface_id]; }
  int global_face_of_dart(int d) const { return gface_of_lface_[lface_of_dart_[d]]; }
  int outer_global_face() const { return outer_gface_; }

  /// BFS distance of every global face from the outer face in the dual
  /// (faces adjacent when they share an edge).
  std::vector<int> dual_distances() const;

  // --- adjacency queries ---------------------------------------------------
  /// Number of distinct neighbours (self-loops do not count the vertex itself).
  int degree(VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  std::optional<EdgeId> first_self_loop() const;
  std::optional<EdgeId> first_parallel_edge() const;
  /// First global face that is a forbidden 2-face: length two and not the
  /// double-sided walk of an isolated single-edge component.
  std::optional<int> first_forbidden_two_face() const;
  std::optional<VertexId> first_isolated_vertex() const;
  bool is_connected() const { return n_comps_ <= 1; }

  // --- derived graphs --------------------------------------------------------
  /// Induced subgraph on V \ drop.  Edge ids, rotation order and the plane
  /// arrangement are preserved: components that split or become isolated
  /// get anchors consistent with the original embedding.
  PlaneMultigraph delete_vertices(const std::vector<VertexId>& drop) const;
  /// Same graph minus the given edges (vertices all kept).
  PlaneMultigraph delete_edges(const std::vector<EdgeId>& drop) const;

  /// Raw data (round-trips through build_graph).
  GraphData to_data() const;

  friend PlaneMultigraph build_graph(const GraphData& data);

 private:
  PlaneMultigraph subgraph(const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge) const;

  std::vector<VertexId> verts_;  // sorted
  std::unordered_map<VertexId, int> vidx_;
  std::vector<Edge> edges_;  // sorted by id
  std::unordered_map<EdgeId, int> eidx_;
  std::vector<int> tail_;                  // per dart: vertex index
  std::vector<std::vector<int>> rot_;      // per vertex index: darts, ccw
  std::vector<int> rot_next_, rot_prev_;   // per dart
  std::vector<int> comp_of_vertex_;        // per vertex index
  int n_comps_ = 0;
  std::vector<std::vector<VertexId>> comp_verts_;
  std::vector<AnchorSpec> anchors_;  // per component
  std::vector<int> outer_lf_;        // per component: local face index
  std::vector<LocalFace> lfaces_;
  std::vector<int> lface_of_dart_;
  std::vector<std::vector<int>> comp_lfaces_;  // component -> lface ids
  std::vector<GlobalFace> gfaces_;
  std::vector<int> gface_of_lface_;
  int outer_gface_ = -1;
  std::vector<std::vector<VertexId>> nbrs_;  // per vertex index: sorted distinct
};

/// Validates `data` and assembles the immutable graph.  Throws ParseError for
/// structural reference problems (unknown/duplicate ids) and
/// InvalidEmbeddingError when the rotation system or nesting is not a plane
/// embedding (per-component Euler check |V|-|E|+|F| = 2, anchor forest).
PlaneMultigraph build_graph(const GraphData& data);

}  // namespace facehit
