#include "facehit/augment.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

#include "facehit/editor.hpp"
#include "facehit/errors.hpp"

namespace facehit {

namespace {

// First dart of the base outer walk; used to keep the outer-face designation
// stable while chords split and merge faces around it.
DartRef outer_mark(const PlaneMultigraph& base) {
  if (base.edge_count() == 0) return DartRef{-1, true};
  const GlobalFace& f = base.global_faces()[base.outer_global_face()];
  for (const FaceWalk& w : f.walks)
    if (!w.darts.empty()) return base.dart_ref(w.darts[0]);
  return DartRef{-1, true};
}

PlaneMultigraph rebuild_with_outer(GraphData data, DartRef mark) {
  PlaneMultigraph g = build_graph(data);
  if (mark.edge < 0) return g;
  int d = g.dart_of(mark.edge, mark.positive);
  const LocalFace& lf = g.local_faces()[g.local_face_of_dart(d)];
  if (lf.index_in_component == 0) return g;
  data.outer_faces[lf.component] = lf.index_in_component;
  return build_graph(data);
}

EdgeKind kind_of(const AugmentedGraph& a, EdgeId e) {
  auto it = a.edge_kind.find(e);
  if (it == a.edge_kind.end())
    throw InternalInvariantError("edge " + std::to_string(e) +
                                 " carries no kind annotation");
  return it->second;
}

bool dart_true(const AugmentedGraph& a, int d) {
  return kind_of(a, a.graph.dart_edge_id(d)) == EdgeKind::true_edge;
}

// Cuts the corner starting at d1 with a dummy chord and rebuilds.
AugmentedGraph chord_at_corner(const AugmentedGraph& a, DartRef d1) {
  HalfEdgeEditor ed(a.graph.to_data());
  EdgeId added = ed.cut_corner(d1);
  AugmentedGraph out;
  out.base = a.base;
  out.edge_kind = a.edge_kind;
  out.edge_kind[added] = EdgeKind::dummy_edge;
  out.graph = rebuild_with_outer(ed.freeze(), outer_mark(a.base));
  return out;
}

AugmentedGraph drop_dummy(const AugmentedGraph& a, EdgeId e) {
  HalfEdgeEditor ed(a.graph.to_data());
  ed.remove_edge(e);
  AugmentedGraph out;
  out.base = a.base;
  out.edge_kind = a.edge_kind;
  out.edge_kind.erase(e);
  out.graph = rebuild_with_outer(ed.freeze(), outer_mark(a.base));
  return out;
}

bool all_big_faces_happy(const AugmentedGraph& a) {
  const auto& faces = a.base.global_faces();
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[f].length >= 3 && !is_face_happy(a, f)) return false;
  return true;
}

std::vector<EdgeId> dummies_at(const AugmentedGraph& a, VertexId v) {
  std::vector<EdgeId> out;
  for (int d : a.graph.rotation(v)) {
    EdgeId e = a.graph.dart_edge_id(d);
    if (kind_of(a, e) == EdgeKind::dummy_edge) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const TrueAngle* pick_free_angle(const std::vector<TrueAngle>& angles) {
  const TrueAngle* pick = nullptr;
  for (const TrueAngle& t : angles)
    if (t.occupied == 0 && (pick == nullptr || t.arm_a < pick->arm_a))
      pick = &t;
  return pick;
}

// Shortest path from src to the nearest vertex of `targets` over true
// (base) edges, neighbors explored in ascending order.
std::vector<VertexId> shortest_true_path(const PlaneMultigraph& base,
                                         VertexId src,
                                         const std::vector<VertexId>& targets) {
  std::set<VertexId> want(targets.begin(), targets.end());
  want.erase(src);
  std::map<VertexId, VertexId> parent;
  parent[src] = src;
  std::queue<VertexId> q;
  q.push(src);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (want.count(x)) {
      std::vector<VertexId> path;
      for (VertexId at = x;; at = parent[at]) {
        path.push_back(at);
        if (at == src) break;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (VertexId y : base.neighbors(x))
      if (!parent.count(y)) {
        parent[y] = x;
        q.push(y);
      }
  }
  return {};
}

void check_augment_invariants(const AugmentedGraph& a) {
  if (!all_big_faces_happy(a))
    throw InternalInvariantError("augmentation left an unhappy big face");
  std::vector<VertexId> unhappy = unhappy_vertices(a);
  if (unhappy.size() > 1)
    throw InternalInvariantError("augmentation left " +
                                 std::to_string(unhappy.size()) +
                                 " unhappy vertices");
  if (unhappy.size() == 1) {
    VertexId v = unhappy[0];
    for (const TrueAngle& t : true_angles(a, v))
      if (t.occupied == 0)
        throw InternalInvariantError("unhappy vertex " + std::to_string(v) +
                                     " still has a free angle");
    for (VertexId u : a.base.neighbors(v))
      if (!is_vertex_happy(a, u))
        throw InternalInvariantError("unhappy vertex " + std::to_string(v) +
                                     " has an unhappy neighbor " +
                                     std::to_string(u));
  }
  // Every dummy must close a facial triangle whose other two edges are true.
  for (const auto& [e, kind] : a.edge_kind) {
    if (kind != EdgeKind::dummy_edge) continue;
    bool supported = false;
    for (bool positive : {true, false}) {
      int d = a.graph.dart_of(e, positive);
      int d2 = a.graph.face_next(d);
      int d3 = a.graph.face_next(d2);
      if (a.graph.face_next(d3) != d) continue;
      if (dart_true(a, d2) && dart_true(a, d3)) {
        supported = true;
        break;
      }
    }
    if (!supported)
      throw InternalInvariantError(
          "dummy edge " + std::to_string(e) +
          " is not supported by a facial triangle with two true edges");
  }
}

}  // namespace

AugmentedGraph make_augmented(const PlaneMultigraph& base) {
  AugmentedGraph a;
  a.base = base;
  a.graph = base;
  for (const Edge& e : base.edges()) a.edge_kind[e.id] = EdgeKind::true_edge;
  return a;
}

bool is_vertex_happy(const AugmentedGraph& a, VertexId v) {
  const std::vector<VertexId>& nbrs = a.base.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (a.graph.adjacent(nbrs[i], nbrs[j])) return true;
  return false;
}

bool is_face_happy(const AugmentedGraph& a, int base_face) {
  const auto& faces = a.base.global_faces();
  if (base_face < 0 || base_face >= static_cast<int>(faces.size()))
    throw BadParameterError("no base face " + std::to_string(base_face));
  const std::vector<VertexId>& vs = faces[base_face].boundary;
  std::set<VertexId> on_face(vs.begin(), vs.end());
  for (const Edge& e : a.graph.edges()) {
    if (e.u == e.v) continue;
    if (!on_face.count(e.u) || !on_face.count(e.v)) continue;
    for (VertexId z : vs) {
      if (z == e.u || z == e.v) continue;
      if (a.graph.adjacent(e.u, z) && a.graph.adjacent(e.v, z)) return true;
    }
  }
  return false;
}

std::vector<TrueAngle> true_angles(const AugmentedGraph& a, VertexId v) {
  if (a.base.degree(v) < 2)
    throw DegreeTooLowError("vertex " + std::to_string(v) +
                            " has fewer than two distinct neighbors");
  const std::vector<int>& rot = a.graph.rotation(v);
  int n = static_cast<int>(rot.size());
  std::vector<int> true_pos;
  for (int i = 0; i < n; ++i)
    if (dart_true(a, rot[i])) true_pos.push_back(i);
  int m = static_cast<int>(true_pos.size());
  std::vector<TrueAngle> out;
  for (int k = 0; k < m; ++k) {
    int i = true_pos[k];
    int j = true_pos[(k + 1) % m];
    int t1 = rot[i];
    int t2 = rot[j];
    if (a.graph.dart_head(t1) == a.graph.dart_head(t2)) continue;
    int gap = (j - i + n) % n;
    out.push_back(TrueAngle{v, t1, t2, gap - 1});
  }
  return out;
}

AugmentedGraph add_dummy_chord(const AugmentedGraph& a, int face, VertexId u,
                               VertexId w) {
  if (u == w)
    throw WouldSelfLoopError("chord endpoints coincide at vertex " +
                             std::to_string(u));
  const auto& faces = a.graph.global_faces();
  if (face < 0 || face >= static_cast<int>(faces.size()))
    throw BadParameterError("no face " + std::to_string(face));
  for (const FaceWalk& walk : faces[face].walks) {
    int len = static_cast<int>(walk.darts.size());
    for (int i = 0; i < len; ++i) {
      int x = walk.darts[i];
      int y = walk.darts[(i + 1) % len];
      if (a.graph.dart_tail(x) != u || a.graph.dart_head(y) != w) continue;
      if (!dart_true(a, x) || !dart_true(a, y)) continue;
      return chord_at_corner(a, a.graph.dart_ref(x));
    }
  }
  throw NotAChordError("vertices " + std::to_string(u) + " and " +
                       std::to_string(w) +
                       " are not at true walk distance two on face " +
                       std::to_string(face));
}

AugmentedGraph satisfy_faces(const AugmentedGraph& a) {
  if (!a.base.is_connected())
    throw PreconditionError("connected", a.base.component_count(),
                            "face satisfaction requires a connected graph");
  if (auto loop = a.base.first_self_loop())
    throw PreconditionError(
        "self-loop", *loop,
        "face satisfaction requires a loopless graph: edge " +
            std::to_string(*loop) + " is a self-loop");
  AugmentedGraph cur = a;
  const auto& base_faces = a.base.global_faces();
  for (int f = 0; f < static_cast<int>(base_faces.size()); ++f) {
    const GlobalFace& bf = base_faces[f];
    if (bf.length < 3) continue;
    if (is_face_happy(cur, f)) continue;
    const FaceWalk* walk = nullptr;
    for (const FaceWalk& w : bf.walks)
      if (!w.darts.empty()) {
        walk = &w;
        break;
      }
    int len = static_cast<int>(walk->darts.size());
    for (int i = 0; i < len; ++i) {
      int x = walk->darts[i];
      int y = walk->darts[(i + 1) % len];
      VertexId u = a.base.dart_tail(x);
      VertexId w2 = a.base.dart_head(y);
      if (u == w2) continue;
      if (cur.graph.adjacent(u, w2)) continue;
      // Base darts keep their identity in the augmented graph; chords cut
      // for other faces never break this face's corners.
      int gx = cur.graph.dart_of(a.base.dart_edge_id(x), a.base.dart_positive(x));
      int gy = cur.graph.dart_of(a.base.dart_edge_id(y), a.base.dart_positive(y));
      if (cur.graph.face_next(gx) != gy)
        throw InternalInvariantError("corner of face " + std::to_string(f) +
                                     " was destroyed by an unrelated chord");
      cur = add_dummy_chord(cur, cur.graph.global_face_of_dart(gx), u, w2);
      break;
    }
    if (!is_face_happy(cur, f))
      throw InternalInvariantError("face " + std::to_string(f) +
                                   " admits no chord yet is not happy");
  }
  return cur;
}

SatisfyResult satisfy_vertex(const AugmentedGraph& a, VertexId v) {
  if (is_vertex_happy(a, v))
    throw VertexAlreadyHappyError("vertex " + std::to_string(v) +
                                  " is already happy");
  std::vector<TrueAngle> angles = true_angles(a, v);
  const TrueAngle* pick = pick_free_angle(angles);
  if (pick == nullptr) return {SatisfyOutcome::no_free_angle, a};
  // Free angle: the arms are consecutive in the rotation, so the corner at
  // the far end of arm_a turns exactly this angle into a triangle.
  AugmentedGraph out =
      chord_at_corner(a, a.graph.dart_ref(PlaneMultigraph::twin(pick->arm_a)));
  if (!is_vertex_happy(out, v))
    throw InternalInvariantError("chording a free angle at vertex " +
                                 std::to_string(v) + " did not make it happy");
  return {SatisfyOutcome::made_happy, std::move(out)};
}

std::optional<AugmentedGraph> remove_redundant_dummy(const AugmentedGraph& a) {
  std::vector<VertexId> happy_before;
  for (VertexId v : a.graph.vertex_ids())
    if (is_vertex_happy(a, v)) happy_before.push_back(v);
  for (const auto& [e, kind] : a.edge_kind) {
    if (kind != EdgeKind::dummy_edge) continue;
    AugmentedGraph cand = drop_dummy(a, e);
    bool ok = true;
    for (VertexId v : happy_before)
      if (!is_vertex_happy(cand, v)) {
        ok = false;
        break;
      }
    if (ok && all_big_faces_happy(cand)) return cand;
  }
  return std::nullopt;
}

AugmentedGraph shift_unhappiness(const AugmentedGraph& a, VertexId v,
                                 VertexId u) {
  if (is_vertex_happy(a, v))
    throw VertexAlreadyHappyError("vertex " + std::to_string(v) +
                                  " is already happy");
  if (!a.base.adjacent(v, u))
    throw PreconditionError("true-neighbor", u,
                            "shift target " + std::to_string(u) +
                                " is not a true neighbor of " +
                                std::to_string(v));
  for (const TrueAngle& t : true_angles(a, v))
    if (t.occupied == 0)
      throw NoTransferEdgeError("vertex " + std::to_string(v) +
                                " has a free angle; chord it instead");
  std::vector<VertexId> happy_before;
  for (VertexId x : a.graph.vertex_ids())
    if (is_vertex_happy(a, x)) happy_before.push_back(x);
  // Dropping a dummy may break a face or a vertex other than u in passing;
  // only the state after the repair chord has to be clean, so every
  // (dropped dummy, freed angle) pair is a candidate and the checks run on
  // the final state alone.
  for (EdgeId e : dummies_at(a, v)) {
    AugmentedGraph mid = drop_dummy(a, e);
    std::vector<TrueAngle> angles = true_angles(mid, v);
    std::sort(angles.begin(), angles.end(),
              [](const TrueAngle& s, const TrueAngle& t) {
                return s.arm_a < t.arm_a;
              });
    for (const TrueAngle& t : angles) {
      if (t.occupied != 0) continue;
      AugmentedGraph fin = chord_at_corner(
          mid, mid.graph.dart_ref(PlaneMultigraph::twin(t.arm_a)));
      if (!is_vertex_happy(fin, v)) continue;
      if (!all_big_faces_happy(fin)) continue;
      bool ok = true;
      for (VertexId x : happy_before)
        if (x != u && !is_vertex_happy(fin, x)) {
          ok = false;
          break;
        }
      if (ok) return fin;
    }
  }
  throw NoTransferEdgeError("no dummy at vertex " + std::to_string(v) +
                            " transfers its unhappiness to " +
                            std::to_string(u));
}

HappinessLedger compute_ledger(const AugmentedGraph& a) {
  HappinessLedger led;
  for (VertexId v : a.graph.vertex_ids())
    if (is_vertex_happy(a, v)) led.happy_vertices.insert(v);
  const auto& faces = a.base.global_faces();
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[f].length >= 3 && is_face_happy(a, f)) led.happy_faces.insert(f);
  for (const auto& [e, kind] : a.edge_kind) {
    if (kind != EdgeKind::dummy_edge) continue;
    const Edge& ed = a.graph.edge(e);
    led.dummy_at[ed.u].push_back(e);
    if (ed.v != ed.u) led.dummy_at[ed.v].push_back(e);
    AugmentedGraph without = drop_dummy(a, e);
    std::vector<VertexId> lost;
    for (VertexId x : led.happy_vertices)
      if (!is_vertex_happy(without, x)) lost.push_back(x);
    led.made_happy_by[e] = std::move(lost);
  }
  return led;
}

std::vector<VertexId> unhappy_vertices(const AugmentedGraph& a) {
  std::vector<VertexId> out;
  for (VertexId v : a.graph.vertex_ids())
    if (!is_vertex_happy(a, v)) out.push_back(v);
  return out;
}

AugmentedGraph augment(const PlaneMultigraph& g) {
  if (!g.is_connected())
    throw PreconditionError("connected", g.component_count(),
                            "augmentation requires a connected graph");
  if (auto loop = g.first_self_loop())
    throw PreconditionError("self-loop", *loop,
                            "augmentation requires a loopless graph: edge " +
                                std::to_string(*loop) + " is a self-loop");
  for (VertexId v : g.vertex_ids())
    if (g.degree(v) < 2)
      throw PreconditionError(
          "degree>=2", v,
          "augmentation requires minimum degree two: vertex " +
              std::to_string(v) + " has " + std::to_string(g.degree(v)) +
              " distinct neighbors");

  AugmentedGraph a = satisfy_faces(make_augmented(g));
  const long long budget = 10LL * (g.vertex_count() + g.edge_count());
  long long steps = 0;
  auto step = [&] {
    if (++steps > budget)
      throw NonConvergenceError("augmentation exceeded " +
                                std::to_string(budget) + " editing steps");
  };

  while (true) {
    std::vector<VertexId> unhappy = unhappy_vertices(a);
    if (unhappy.size() <= 1) break;
    bool progressed = false;
    for (VertexId v : unhappy) {
      SatisfyResult r = satisfy_vertex(a, v);
      if (r.outcome == SatisfyOutcome::made_happy) {
        a = std::move(r.result);
        step();
        progressed = true;
        break;
      }
    }
    if (progressed) continue;
    if (auto removed = remove_redundant_dummy(a)) {
      a = std::move(*removed);
      step();
      continue;
    }
    // Shift unhappiness one true edge toward the nearest other unhappy
    // vertex; when that target rejects every transfer, any other true
    // neighbor keeps the unhappiness moving, and every unhappy source gets
    // a turn before giving up.
    bool shifted = false;
    for (VertexId v : unhappy) {
      std::vector<VertexId> path = shortest_true_path(a.base, v, unhappy);
      if (path.size() < 2) continue;
      std::vector<VertexId> targets{path[1]};
      for (VertexId u : a.base.neighbors(v))
        if (u != path[1]) targets.push_back(u);
      for (VertexId u : targets) {
        try {
          a = shift_unhappiness(a, v, u);
          step();
          shifted = true;
          break;
        } catch (const NoTransferEdgeError&) {
        }
      }
      if (shifted) break;
    }
    if (!shifted)
      throw NonConvergenceError(
          "stuck with " + std::to_string(unhappy.size()) +
          " unhappy vertices and no free angle, redundant dummy, or "
          "transferable dummy");
  }

  // Chord remaining free angles so a final unhappy vertex has none.
  while (true) {
    std::vector<VertexId> unhappy = unhappy_vertices(a);
    if (unhappy.empty()) break;
    SatisfyResult r = satisfy_vertex(a, unhappy[0]);
    if (r.outcome == SatisfyOutcome::no_free_angle) break;
    a = std::move(r.result);
    step();
  }

  check_augment_invariants(a);
  return a;
}

}  // namespace facehit
