#pragma once

#include <optional>
#include <map>
#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

// Mutable rotation-system editor.  Faces are implicit orbits of face_next;
// no validation happens until the caller freezes the data and rebuilds a
// PlaneMultigraph.  Edge and vertex ids are never reused within one editor.
class HalfEdgeEditor {
 public:
  HalfEdgeEditor() = default;
  explicit HalfEdgeEditor(const GraphData& data);

  bool has_vertex(VertexId v) const { return rot_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId tail(DartRef d) const;
  VertexId head(DartRef d) const { return tail(twin(d)); }
  static DartRef twin(DartRef d) { return {d.edge, !d.positive}; }
  const std::vector<DartRef>& rotation(VertexId v) const;
  DartRef rot_next(DartRef d) const;
  DartRef rot_prev(DartRef d) const;
  DartRef face_next(DartRef d) const { return rot_next(twin(d)); }
  DartRef face_prev(DartRef d) const { return twin(rot_prev(d)); }
  // The orbit of face_next starting at d.
  std::vector<DartRef> face_walk(DartRef d) const;
  bool adjacent(VertexId u, VertexId v) const;

  VertexId add_vertex();
  void add_vertex(VertexId v);
  // New edge u-v with a fresh id.  Its positive dart goes immediately before
  // before_u in the rotation at u, the negative dart immediately before
  // before_v at v.  std::nullopt is only legal for an empty rotation.
  EdgeId insert_edge(VertexId u, VertexId v, std::optional<DartRef> before_u,
                     std::optional<DartRef> before_v);
  void remove_edge(EdgeId e);
  // Chord from tail(d1) to head(face_next(d1)) splitting off the facial
  // triangle (d1, face_next(d1), new_edge-).  Throws WouldSelfLoopError when
  // the two corner endpoints coincide.
  EdgeId cut_corner(DartRef d1);
  // New vertex inside the facial triangle at d0, joined to all three corners;
  // the three resulting faces are again triangles.
  VertexId insert_apex(DartRef d0);
  // A diagonal flip needs triangles on both sides and must not create a
  // self-loop or a parallel edge.
  bool can_flip(EdgeId e) const;
  EdgeId flip_diagonal(EdgeId e);

  // Vertices, edges and rotations of the current state; anchors and outer
  // face designations are the caller's business.
  GraphData freeze() const;

 private:
  std::size_t position_of(VertexId v, DartRef d) const;

  std::map<VertexId, std::vector<DartRef>> rot_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

}  // namespace facehit
