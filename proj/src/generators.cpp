#include "facehit/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "facehit/editor.hpp"
#include "facehit/errors.hpp"
#include "facehit/rng.hpp"

namespace facehit {

namespace {

GraphData triangle_data() {
  GraphData d;
  d.vertices = {0, 1, 2};
  d.edges = {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}};
  d.rotations[0] = {{0, true}, {2, true}};
  d.rotations[1] = {{1, true}, {0, false}};
  d.rotations[2] = {{2, false}, {1, false}};
  return d;
}

// One representative dart per face orbit, in ascending dart order.
std::vector<DartRef> face_representatives(const HalfEdgeEditor& ed) {
  std::set<std::pair<EdgeId, bool>> seen;
  std::vector<DartRef> reps;
  for (EdgeId e : ed.edge_ids())
    for (bool positive : {true, false}) {
      if (seen.count({e, positive})) continue;
      DartRef d{e, positive};
      reps.push_back(d);
      for (const DartRef& w : ed.face_walk(d)) seen.insert({w.edge, w.positive});
    }
  return reps;
}

void append_offset_copy(GraphData& data, const GraphData& piece,
                        VertexId vertex_offset, EdgeId edge_offset) {
  for (VertexId v : piece.vertices) data.vertices.push_back(v + vertex_offset);
  for (const Edge& e : piece.edges)
    data.edges.push_back({e.id + edge_offset, e.u + vertex_offset, e.v + vertex_offset});
  for (const auto& [v, refs] : piece.rotations) {
    std::vector<DartRef> out;
    out.reserve(refs.size());
    for (const DartRef& r : refs) out.push_back({r.edge + edge_offset, r.positive});
    data.rotations[v + vertex_offset] = std::move(out);
  }
}

GraphData single_edge_data() {
  GraphData d;
  d.vertices = {0, 1};
  d.edges = {{0, 0, 1}};
  d.rotations[0] = {{0, true}};
  d.rotations[1] = {{0, false}};
  return d;
}

GraphData path_data(int edge_count) {
  GraphData d;
  for (int v = 0; v <= edge_count; ++v) d.vertices.push_back(v);
  for (int e = 0; e < edge_count; ++e) d.edges.push_back({e, e, e + 1});
  d.rotations[0] = {{0, true}};
  for (int v = 1; v < edge_count; ++v)
    d.rotations[v] = {{v - 1, false}, {v, true}};
  d.rotations[edge_count] = {{edge_count - 1, false}};
  return d;
}

// 4-cycle whose bounded face is traced first; the unbounded side is local
// face 1.
GraphData cycle4_data() {
  GraphData d;
  d.vertices = {0, 1, 2, 3};
  d.edges = {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}};
  d.rotations[0] = {{3, false}, {0, true}};
  d.rotations[1] = {{0, false}, {1, true}};
  d.rotations[2] = {{1, false}, {2, true}};
  d.rotations[3] = {{2, false}, {3, true}};
  return d;
}

// K4 with every edge doubled.  Edges 0..5 are the K4 of the fixed plane
// embedding, edges 6..11 their parallel copies; each pair bounds a 2-face.
// The copy's positive dart sits right before the original at the tail and
// its negative dart right after the original at the head, which leaves the
// original triangle faces intact (they pick up the copy darts) and traces
// the old outer triangle {0,1,2} as local face 3.
GraphData doubled_k4_data() {
  GraphData d;
  d.vertices = {0, 1, 2, 3};
  int uv[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int e = 0; e < 6; ++e) d.edges.push_back({e, uv[e][0], uv[e][1]});
  for (int e = 0; e < 6; ++e) d.edges.push_back({e + 6, uv[e][0], uv[e][1]});
  auto pos = [](EdgeId e) { return DartRef{e, true}; };
  auto neg = [](EdgeId e) { return DartRef{e, false}; };
  d.rotations[0] = {pos(6), pos(0), pos(8), pos(2), pos(7), pos(1)};
  d.rotations[1] = {pos(9), pos(3), pos(10), pos(4), neg(0), neg(6)};
  d.rotations[2] = {neg(1), neg(7), pos(11), pos(5), neg(3), neg(9)};
  d.rotations[3] = {neg(5), neg(11), neg(2), neg(8), neg(4), neg(10)};
  return d;
}

struct GuestPiece {
  GraphData data;
  int outer_local_face;
};

GuestPiece guest_piece(int size, SplitMix64& rng) {
  switch (size) {
    case 2:
      return {single_edge_data(), 0};
    case 3:
      return rng.chance(1, 2) ? GuestPiece{triangle_data(), 0}
                              : GuestPiece{path_data(2), 0};
    case 4:
      return rng.chance(1, 2) ? GuestPiece{cycle4_data(), 1}
                              : GuestPiece{path_data(3), 0};
    default:
      throw InternalInvariantError("guest pieces come in sizes 2..4");
  }
}

// Host plus one guest component anchored inside the given host global face.
PlaneMultigraph nest_guest(const PlaneMultigraph& host, const GuestPiece& piece,
                           int host_global_face) {
  const GlobalFace& face = host.global_faces()[host_global_face];
  const FaceWalk* dartful = nullptr;
  for (const FaceWalk& w : face.walks)
    if (!w.darts.empty()) {
      dartful = &w;
      break;
    }
  if (dartful == nullptr)
    throw InternalInvariantError("host face has no dart to anchor behind");
  const LocalFace& lf = host.local_faces()[host.local_face_of_dart(dartful->darts[0])];

  GraphData data = host.to_data();
  VertexId vofs = data.vertices.back() + 1;
  EdgeId eofs = 0;
  for (const Edge& e : data.edges) eofs = std::max(eofs, e.id + 1);
  append_offset_copy(data, piece.data, vofs, eofs);
  int guest_comp = host.component_count();
  data.anchors[guest_comp] = {false, lf.component, lf.index_in_component};
  data.outer_faces[guest_comp] = piece.outer_local_face;
  return build_graph(data);
}

}  // namespace

PlaneMultigraph stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 3)
    throw BadParameterError("stacked triangulation needs n >= 3, got " +
                            std::to_string(n));
  SplitMix64 rng(seed);
  HalfEdgeEditor ed(triangle_data());
  for (int v = 3; v < n; ++v) {
    std::vector<DartRef> faces = face_representatives(ed);
    ed.insert_apex(faces[rng.below(faces.size())]);
  }
  for (int attempt = 0; attempt < n; ++attempt) {
    std::vector<EdgeId> eids = ed.edge_ids();
    EdgeId e = eids[rng.below(eids.size())];
    if (ed.can_flip(e)) ed.flip_diagonal(e);
  }
  return build_graph(ed.freeze());
}

PlaneMultigraph disjoint_family(FamilyKind kind, int k) {
  if (k < 1)
    throw BadParameterError("disjoint family needs k >= 1, got " +
                            std::to_string(k));
  GraphData piece;
  int outer = 0;
  switch (kind) {
    case FamilyKind::edges:
      piece = single_edge_data();
      break;
    case FamilyKind::paths_3edge:
      piece = path_data(3);
      break;
    case FamilyKind::cycles_4:
      piece = cycle4_data();
      outer = 1;
      break;
  }
  VertexId nv = static_cast<VertexId>(piece.vertices.size());
  EdgeId ne = static_cast<EdgeId>(piece.edges.size());
  GraphData data;
  for (int i = 0; i < k; ++i) {
    append_offset_copy(data, piece, nv * i, ne * i);
    if (outer != 0) data.outer_faces[i] = outer;
  }
  return build_graph(data);
}

PlaneMultigraph doubled_k4_family(int k) {
  if (k < 1)
    throw BadParameterError("doubled-K4 family needs k >= 1, got " +
                            std::to_string(k));
  GraphData data;
  for (int i = 0; i < k; ++i) {
    append_offset_copy(data, doubled_k4_data(), 4 * i, 12 * i);
    data.outer_faces[i] = 3;
  }
  return build_graph(data);
}

PlaneMultigraph loop_gadget() {
  GraphData d;
  d.vertices = {0, 1, 2, 3};
  d.edges = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 1}, {4, 0, 2}, {5, 0, 3}};
  d.rotations[0] = {{0, true},  {3, true}, {0, false}, {1, true}, {4, true},
                    {1, false}, {2, true}, {5, true},  {2, false}};
  d.rotations[1] = {{3, false}};
  d.rotations[2] = {{4, false}};
  d.rotations[3] = {{5, false}};
  return build_graph(d);
}

PlaneMultigraph random_theorem_instance(int n, std::uint64_t seed) {
  if (n < 2)
    throw BadParameterError("random instance needs n >= 2, got " +
                            std::to_string(n));
  if (n == 2) return build_graph(single_edge_data());
  SplitMix64 rng(seed);

  // Split the vertex budget: triangulation core, pendant tree vertices,
  // nested guest vertices.  Guests come in sizes 2..4, so avoid leaving a
  // remainder of exactly 1.
  int extras = (n >= 6) ? static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 3 + 1)))
                        : 0;
  int nested = (extras >= 2)
                   ? static_cast<int>(rng.below(static_cast<std::uint64_t>(extras + 1)))
                   : 0;
  if (nested == 1) nested = 0;
  int pendants = extras - nested;
  int core = n - extras;

  PlaneMultigraph tri = stacked_triangulation(core, rng.next());
  HalfEdgeEditor ed(tri.to_data());
  for (int i = 0; i < pendants; ++i) {
    VertexId u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(core + i)));
    const std::vector<DartRef>& rot = ed.rotation(u);
    DartRef before = rot[rng.below(rot.size())];
    VertexId leaf = ed.add_vertex();
    ed.insert_edge(u, leaf, before, std::nullopt);
  }
  PlaneMultigraph g = build_graph(ed.freeze());

  // Random edge deletions, rejection-sampled so nobody is isolated.  The
  // graph is simple here, so deletions cannot create self-loops or 2-faces.
  std::vector<EdgeId> order;
  for (const Edge& e : g.edges()) order.push_back(e.id);
  rng.shuffle(order);
  for (EdgeId e : order) {
    if (!rng.chance(1, 4)) continue;
    PlaneMultigraph next = g.delete_edges({e});
    if (next.first_isolated_vertex().has_value()) continue;
    g = std::move(next);
  }

  // Nest small theorem-valid components into random faces.
  int left = nested;
  while (left > 0) {
    std::vector<int> sizes;
    for (int s = 2; s <= 4; ++s)
      if (s <= left && (left - s == 0 || left - s >= 2)) sizes.push_back(s);
    if (sizes.empty())
      throw InternalInvariantError("guest budget cannot be spent");
    int size = sizes[rng.below(sizes.size())];
    GuestPiece piece = guest_piece(size, rng);
    int face = static_cast<int>(rng.below(g.global_faces().size()));
    g = nest_guest(g, piece, face);
    left -= size;
  }

  if (g.vertex_count() != n)
    throw InternalInvariantError("instance size drifted from the request");
  if (g.first_isolated_vertex().has_value() || g.first_self_loop().has_value() ||
      g.first_forbidden_two_face().has_value())
    throw InternalInvariantError("instance violates the partition preconditions");
  return g;
}

}  // namespace facehit
