#include "facehit/editor.hpp"

#include <algorithm>

#include "facehit/errors.hpp"

namespace facehit {

HalfEdgeEditor::HalfEdgeEditor(const GraphData& data) {
  for (VertexId v : data.vertices) {
    if (!rot_.emplace(v, std::vector<DartRef>{}).second)
      throw ParseError("duplicate vertex " + std::to_string(v));
    next_vertex_ = std::max(next_vertex_, v + 1);
  }
  for (const Edge& e : data.edges) {
    if (!rot_.count(e.u) || !rot_.count(e.v))
      throw ParseError("edge " + std::to_string(e.id) + " has unknown endpoint");
    if (!edges_.emplace(e.id, std::make_pair(e.u, e.v)).second)
      throw ParseError("duplicate edge " + std::to_string(e.id));
    next_edge_ = std::max(next_edge_, e.id + 1);
  }
  for (const auto& [v, refs] : data.rotations) {
    if (!rot_.count(v))
      throw ParseError("rotation for unknown vertex " + std::to_string(v));
    for (const DartRef& d : refs) {
      if (!edges_.count(d.edge))
        throw ParseError("rotation at " + std::to_string(v) +
                         " references unknown edge " + std::to_string(d.edge));
      if (tail(d) != v)
        throw InvalidEmbeddingError("dart of edge " + std::to_string(d.edge) +
                                    " listed at vertex " + std::to_string(v) +
                                    " which is not its tail");
    }
    rot_[v] = refs;
  }
}

std::vector<VertexId> HalfEdgeEditor::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(rot_.size());
  for (const auto& [v, refs] : rot_) out.push_back(v);
  return out;
}

std::vector<EdgeId> HalfEdgeEditor::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [e, uv] : edges_) out.push_back(e);
  return out;
}

std::pair<VertexId, VertexId> HalfEdgeEditor::endpoints(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end())
    throw InternalInvariantError("editor: no edge " + std::to_string(e));
  return it->second;
}

VertexId HalfEdgeEditor::tail(DartRef d) const {
  auto uv = endpoints(d.edge);
  return d.positive ? uv.first : uv.second;
}

const std::vector<DartRef>& HalfEdgeEditor::rotation(VertexId v) const {
  auto it = rot_.find(v);
  if (it == rot_.end())
    throw UnknownVertexError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t HalfEdgeEditor::position_of(VertexId v, DartRef d) const {
  const std::vector<DartRef>& refs = rotation(v);
  for (std::size_t i = 0; i < refs.size(); ++i)
    if (refs[i] == d) return i;
  throw InternalInvariantError("editor: dart of edge " + std::to_string(d.edge) +
                               " not in rotation at " + std::to_string(v));
}

DartRef HalfEdgeEditor::rot_next(DartRef d) const {
  VertexId v = tail(d);
  const std::vector<DartRef>& refs = rotation(v);
  std::size_t i = position_of(v, d);
  return refs[(i + 1) % refs.size()];
}

DartRef HalfEdgeEditor::rot_prev(DartRef d) const {
  VertexId v = tail(d);
  const std::vector<DartRef>& refs = rotation(v);
  std::size_t i = position_of(v, d);
  return refs[(i + refs.size() - 1) % refs.size()];
}

std::vector<DartRef> HalfEdgeEditor::face_walk(DartRef d) const {
  std::vector<DartRef> walk;
  DartRef cur = d;
  do {
    walk.push_back(cur);
    cur = face_next(cur);
    if (walk.size() > 2 * edges_.size())
      throw InternalInvariantError("editor: face walk does not close");
  } while (!(cur == d));
  return walk;
}

bool HalfEdgeEditor::adjacent(VertexId u, VertexId v) const {
  for (const DartRef& d : rotation(u))
    if (head(d) == v) return true;
  return false;
}

VertexId HalfEdgeEditor::add_vertex() {
  VertexId v = next_vertex_;
  add_vertex(v);
  return v;
}

void HalfEdgeEditor::add_vertex(VertexId v) {
  if (!rot_.emplace(v, std::vector<DartRef>{}).second)
    throw InternalInvariantError("editor: vertex " + std::to_string(v) +
                                 " already present");
  next_vertex_ = std::max(next_vertex_, v + 1);
}

EdgeId HalfEdgeEditor::insert_edge(VertexId u, VertexId v,
                                   std::optional<DartRef> before_u,
                                   std::optional<DartRef> before_v) {
  if (!rot_.count(u))
    throw UnknownVertexError("unknown vertex " + std::to_string(u));
  if (!rot_.count(v))
    throw UnknownVertexError("unknown vertex " + std::to_string(v));
  EdgeId e = next_edge_++;
  edges_.emplace(e, std::make_pair(u, v));
  auto place = [&](VertexId at, DartRef dart, const std::optional<DartRef>& before) {
    std::vector<DartRef>& refs = rot_[at];
    if (!before.has_value()) {
      if (!refs.empty())
        throw InternalInvariantError(
            "editor: anchorless insertion into a non-empty rotation at " +
            std::to_string(at));
      refs.push_back(dart);
      return;
    }
    refs.insert(refs.begin() + static_cast<std::ptrdiff_t>(position_of(at, *before)),
                dart);
  };
  place(u, {e, true}, before_u);
  place(v, {e, false}, before_v);
  return e;
}

void HalfEdgeEditor::remove_edge(EdgeId e) {
  auto [u, v] = endpoints(e);
  auto drop = [&](VertexId at, DartRef dart) {
    std::vector<DartRef>& refs = rot_[at];
    refs.erase(refs.begin() + static_cast<std::ptrdiff_t>(position_of(at, dart)));
  };
  drop(u, {e, true});
  drop(v, {e, false});
  edges_.erase(e);
}

EdgeId HalfEdgeEditor::cut_corner(DartRef d1) {
  DartRef d2 = face_next(d1);
  VertexId u = tail(d1);
  VertexId w = head(d2);
  if (u == w)
    throw WouldSelfLoopError("chord at the corner of edges " +
                             std::to_string(d1.edge) + " and " +
                             std::to_string(d2.edge) + " would be a self-loop at " +
                             std::to_string(u));
  // Positive dart (u -> w) right before d1; negative dart right after twin(d2),
  // which closes the facial triangle (d1, d2, new-).
  DartRef after_twin = rot_next(twin(d2));
  return insert_edge(u, w, d1, after_twin);
}

VertexId HalfEdgeEditor::insert_apex(DartRef d0) {
  DartRef d1 = face_next(d0);
  DartRef d2 = face_next(d1);
  if (!(face_next(d2) == d0))
    throw InternalInvariantError("editor: apex insertion into a non-triangle face");
  VertexId c0 = tail(d0);
  VertexId c1 = tail(d1);
  VertexId c2 = tail(d2);
  VertexId x = add_vertex();
  EdgeId g0 = insert_edge(c0, x, d0, std::nullopt);
  EdgeId g1 = insert_edge(c1, x, d1, DartRef{g0, false});
  insert_edge(c2, x, d2, DartRef{g1, false});
  return x;
}

bool HalfEdgeEditor::can_flip(EdgeId e) const {
  if (!edges_.count(e)) return false;
  DartRef g{e, true};
  DartRef h{e, false};
  DartRef a = face_next(g);
  DartRef b = face_next(a);
  DartRef c = face_next(h);
  DartRef d = face_next(c);
  if (!(face_next(b) == g) || !(face_next(d) == h)) return false;
  if (a.edge == e || b.edge == e || c.edge == e || d.edge == e) return false;
  VertexId q = head(a);
  VertexId r = head(c);
  return q != r && !adjacent(q, r);
}

EdgeId HalfEdgeEditor::flip_diagonal(EdgeId e) {
  if (!can_flip(e))
    throw InternalInvariantError("editor: edge " + std::to_string(e) +
                                 " is not flippable");
  DartRef g{e, true};
  DartRef a = face_next(g);
  DartRef b = face_next(a);
  remove_edge(e);
  // The two triangles merged into the quad (a, b, c, d); cutting the corner
  // at b joins the two vertices opposite the removed diagonal.
  return cut_corner(b);
}

GraphData HalfEdgeEditor::freeze() const {
  GraphData data;
  data.vertices = vertex_ids();
  for (const auto& [e, uv] : edges_)
    data.edges.push_back({e, uv.first, uv.second});
  for (const auto& [v, refs] : rot_)
    if (!refs.empty()) data.rotations[v] = refs;
  return data;
}

}  // namespace facehit
