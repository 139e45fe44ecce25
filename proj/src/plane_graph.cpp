#include "facehit/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace facehit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

std::string vstr(VertexId v) { return std::to_string(v); }

}  // namespace

int PlaneMultigraph::vertex_index(VertexId v) const {
  auto it = vidx_.find(v);
  if (it == vidx_.end()) throw UnknownVertexError("unknown vertex " + vstr(v));
  return it->second;
}

const Edge& PlaneMultigraph::edge(EdgeId e) const {
  auto it = eidx_.find(e);
  if (it == eidx_.end()) throw ParseError("unknown edge " + std::to_string(e));
  return edges_[it->second];
}

int PlaneMultigraph::dart_of(EdgeId e, bool positive) const {
  auto it = eidx_.find(e);
  if (it == eidx_.end()) throw ParseError("unknown edge " + std::to_string(e));
  return 2 * it->second + (positive ? 0 : 1);
}

const std::vector<int>& PlaneMultigraph::rotation(VertexId v) const {
  return rot_[vertex_index(v)];
}

int PlaneMultigraph::local_face_id(int component, int index_in_component) const {
  return comp_lfaces_[component][index_in_component];
}

int PlaneMultigraph::degree(VertexId v) const {
  return static_cast<int>(nbrs_[vertex_index(v)].size());
}

const std::vector<VertexId>& PlaneMultigraph::neighbors(VertexId v) const {
  return nbrs_[vertex_index(v)];
}

bool PlaneMultigraph::adjacent(VertexId u, VertexId v) const {
  const auto& nu = nbrs_[vertex_index(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<EdgeId> PlaneMultigraph::first_self_loop() const {
  for (const Edge& e : edges_)
    if (e.u == e.v) return e.id;
  return std::nullopt;
}

std::optional<EdgeId> PlaneMultigraph::first_parallel_edge() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) return e.id;
  }
  return std::nullopt;
}

std::optional<int> PlaneMultigraph::first_forbidden_two_face() const {
  for (const GlobalFace& f : gfaces_) {
    if (f.length != 2) continue;
    // The sole benign shape: one walk of two mutually twin darts, i.e. the
    // single face of an isolated-edge component seen from both sides.  A
    // lens between parallel edges is the forbidden case.
    if (f.walks.size() == 1 && f.walks[0].darts.size() == 2 &&
        f.walks[0].darts[0] == (f.walks[0].darts[1] ^ 1))
      continue;
    return f.id;
  }
  return std::nullopt;
}

std::optional<VertexId> PlaneMultigraph::first_isolated_vertex() const {
  for (VertexId v : verts_)
    if (nbrs_[vidx_.at(v)].empty() && rot_[vidx_.at(v)].empty()) return v;
  return std::nullopt;
}

std::vector<int> PlaneMultigraph::dual_distances() const {
  std::vector<int> dist(gfaces_.size(), std::numeric_limits<int>::max());
  if (outer_gface_ < 0) return dist;
  std::deque<int> queue;
  dist[outer_gface_] = 0;
  queue.push_back(outer_gface_);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int k = 0; k < edge_count(); ++k) {
      int a = global_face_of_dart(2 * k);
      int b = global_face_of_dart(2 * k + 1);
      if (a != f && b != f) continue;
      int other = (a == f) ? b : a;
      if (dist[other] == std::numeric_limits<int>::max()) {
        dist[other] = dist[f] + 1;
        queue.push_back(other);
      }
    }
  }
  return dist;
}

GraphData PlaneMultigraph::to_data() const {
  GraphData data;
  data.vertices = verts_;
  data.edges = edges_;
  for (VertexId v : verts_) {
    const auto& rot = rot_[vidx_.at(v)];
    if (rot.empty()) continue;
    std::vector<DartRef> refs;
    refs.reserve(rot.size());
    for (int d : rot) refs.push_back(dart_ref(d));
    data.rotations[v] = std::move(refs);
  }
  for (int c = 0; c < n_comps_; ++c) {
    data.anchors[c] = anchors_[c];
    data.outer_faces[c] = outer_lf_[c];
  }
  return data;
}

PlaneMultigraph build_graph(const GraphData& data) {
  PlaneMultigraph g;

  // Vertices: sorted, unique.
  g.verts_ = data.vertices;
  std::sort(g.verts_.begin(), g.verts_.end());
  for (std::size_t i = 1; i < g.verts_.size(); ++i)
    if (g.verts_[i] == g.verts_[i - 1])
      throw ParseError("duplicate vertex " + vstr(g.verts_[i]));
  for (std::size_t i = 0; i < g.verts_.size(); ++i)
    g.vidx_[g.verts_[i]] = static_cast<int>(i);

  // Edges: sorted by id, unique ids, endpoints declared.
  g.edges_ = data.edges;
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < g.edges_.size(); ++i)
    if (g.edges_[i].id == g.edges_[i - 1].id)
      throw ParseError("duplicate edge id " + std::to_string(g.edges_[i].id));
  for (std::size_t k = 0; k < g.edges_.size(); ++k) {
    const Edge& e = g.edges_[k];
    if (!g.vidx_.count(e.u) || !g.vidx_.count(e.v))
      throw ParseError("edge " + std::to_string(e.id) + " references unknown vertex");
    g.eidx_[e.id] = static_cast<int>(k);
  }

  const int n = g.vertex_count();
  const int m = g.edge_count();
  g.tail_.resize(2 * m);
  for (int k = 0; k < m; ++k) {
    g.tail_[2 * k] = g.vidx_[g.edges_[k].u];
    g.tail_[2 * k + 1] = g.vidx_[g.edges_[k].v];
  }

  // Rotations: each vertex must list exactly its incident darts, once each.
  g.rot_.assign(n, {});
  for (const auto& [v, refs] : data.rotations) {
    auto it = g.vidx_.find(v);
    if (it == g.vidx_.end())
      throw ParseError("rotation for unknown vertex " + vstr(v));
    auto& rot = g.rot_[it->second];
    for (const DartRef& r : refs) {
      auto eit = g.eidx_.find(r.edge);
      if (eit == g.eidx_.end())
        throw ParseError("rotation at vertex " + vstr(v) + " references unknown edge " +
                         std::to_string(r.edge));
      rot.push_back(2 * eit->second + (r.positive ? 0 : 1));
    }
  }
  {
    std::vector<int> seen_at(2 * m, -1);
    for (int vi = 0; vi < n; ++vi) {
      for (int d : g.rot_[vi]) {
        if (g.tail_[d] != vi)
          throw InvalidEmbeddingError("rotation at vertex " + vstr(g.verts_[vi]) +
                                      " lists dart of edge " +
                                      std::to_string(g.dart_edge_id(d)) +
                                      " whose tail is another vertex");
        if (seen_at[d] != -1)
          throw InvalidEmbeddingError("rotation at vertex " + vstr(g.verts_[vi]) +
                                      " lists a dart twice (edge " +
                                      std::to_string(g.dart_edge_id(d)) + ")");
        seen_at[d] = vi;
      }
    }
    for (int d = 0; d < 2 * m; ++d)
      if (seen_at[d] == -1)
        throw InvalidEmbeddingError("rotation at vertex " + vstr(g.verts_[g.tail_[d]]) +
                                    " is missing a dart of edge " +
                                    std::to_string(g.dart_edge_id(d)));
  }
  g.rot_next_.assign(2 * m, -1);
  g.rot_prev_.assign(2 * m, -1);
  for (int vi = 0; vi < n; ++vi) {
    const auto& rot = g.rot_[vi];
    const int sz = static_cast<int>(rot.size());
    for (int i = 0; i < sz; ++i) {
      g.rot_next_[rot[i]] = rot[(i + 1) % sz];
      g.rot_prev_[rot[i]] = rot[(i + sz - 1) % sz];
    }
  }

  // Components, indexed by smallest vertex id.
  {
    UnionFind uf(n);
    for (const Edge& e : g.edges_) uf.unite(g.vidx_[e.u], g.vidx_[e.v]);
    std::map<int, int> root_to_comp;  // uf root (by smallest vertex index) -> comp
    g.comp_of_vertex_.assign(n, -1);
    for (int vi = 0; vi < n; ++vi) {  // verts_ sorted, so roots appear in min-id order
      int r = uf.find(vi);
      if (!root_to_comp.count(r)) {
        int c = static_cast<int>(root_to_comp.size());
        root_to_comp[r] = c;
        g.comp_verts_.push_back({});
      }
      g.comp_of_vertex_[vi] = root_to_comp[r];
      g.comp_verts_[root_to_comp[r]].push_back(g.verts_[vi]);
    }
    g.n_comps_ = static_cast<int>(root_to_comp.size());
  }

  // Local faces: orbits of the face successor, discovered in dart order.
  g.lface_of_dart_.assign(2 * m, -1);
  g.comp_lfaces_.assign(g.n_comps_, {});
  for (int d = 0; d < 2 * m; ++d) {
    if (g.lface_of_dart_[d] != -1) continue;
    LocalFace f;
    f.component = g.comp_of_vertex_[g.tail_[d]];
    f.index_in_component = static_cast<int>(g.comp_lfaces_[f.component].size());
    int x = d;
    do {
      g.lface_of_dart_[x] = static_cast<int>(g.lfaces_.size());
      f.walk.push_back(x);
      x = g.rot_next_[x ^ 1];  // face successor
    } while (x != d);
    g.comp_lfaces_[f.component].push_back(static_cast<int>(g.lfaces_.size()));
    g.lfaces_.push_back(std::move(f));
  }
  // Isolated vertices own a single zero-length face.
  for (int vi = 0; vi < n; ++vi) {
    if (!g.rot_[vi].empty()) continue;
    int c = g.comp_of_vertex_[vi];
    LocalFace f;
    f.component = c;
    f.index_in_component = 0;
    f.lone_vertex = g.verts_[vi];
    g.comp_lfaces_[c].push_back(static_cast<int>(g.lfaces_.size()));
    g.lfaces_.push_back(std::move(f));
  }

  // Per-component Euler check: |V| - |E| + |F| must be 2.
  {
    std::vector<int> cv(g.n_comps_, 0), ce(g.n_comps_, 0), cf(g.n_comps_, 0);
    for (int vi = 0; vi < n; ++vi) ++cv[g.comp_of_vertex_[vi]];
    for (const Edge& e : g.edges_) ++ce[g.comp_of_vertex_[g.vidx_[e.u]]];
    for (const LocalFace& f : g.lfaces_) ++cf[f.component];
    for (int c = 0; c < g.n_comps_; ++c) {
      if (cv[c] - ce[c] + cf[c] != 2) {
        std::ostringstream os;
        os << "component " << c << " (smallest vertex " << g.comp_verts_[c][0]
           << ") fails the Euler check: |V|-|E|+|F| = " << cv[c] << "-" << ce[c] << "+"
           << cf[c] << " = " << (cv[c] - ce[c] + cf[c]) << ", expected 2";
        throw InvalidEmbeddingError(os.str());
      }
    }
  }

  // Anchors and outer faces.
  g.anchors_.assign(g.n_comps_, AnchorSpec{});
  g.outer_lf_.assign(g.n_comps_, 0);
  for (const auto& [c, a] : data.anchors) {
    if (c < 0 || c >= g.n_comps_)
      throw InvalidEmbeddingError("anchor for out-of-range component " + std::to_string(c));
    if (!a.root) {
      if (a.parent_component < 0 || a.parent_component >= g.n_comps_)
        throw InvalidEmbeddingError("anchor of component " + std::to_string(c) +
                                    " references out-of-range component " +
                                    std::to_string(a.parent_component));
      if (a.parent_component == c)
        throw InvalidEmbeddingError("component " + std::to_string(c) +
                                    " is anchored inside itself");
      if (a.parent_local_face < 0 ||
          a.parent_local_face >= static_cast<int>(g.comp_lfaces_[a.parent_component].size()))
        throw InvalidEmbeddingError("anchor of component " + std::to_string(c) +
                                    " references out-of-range local face " +
                                    std::to_string(a.parent_local_face));
    }
    g.anchors_[c] = a;
  }
  for (const auto& [c, lf] : data.outer_faces) {
    if (c < 0 || c >= g.n_comps_)
      throw InvalidEmbeddingError("outer face for out-of-range component " + std::to_string(c));
    if (lf < 0 || lf >= static_cast<int>(g.comp_lfaces_[c].size()))
      throw InvalidEmbeddingError("outer face of component " + std::to_string(c) +
                                  " out of range: " + std::to_string(lf));
    g.outer_lf_[c] = lf;
  }
  // The anchor relation must be a forest over components.
  for (int c = 0; c < g.n_comps_; ++c) {
    int steps = 0, x = c;
    while (!g.anchors_[x].root) {
      x = g.anchors_[x].parent_component;
      if (++steps > g.n_comps_)
        throw InvalidEmbeddingError("anchor cycle through component " + std::to_string(c));
    }
  }

  // Global faces: merge each component's outer face into its anchor face;
  // all root components share the unbounded region (virtual node L).
  {
    const int L = static_cast<int>(g.lfaces_.size());
    UnionFind uf(L + 1);
    for (int c = 0; c < g.n_comps_; ++c) {
      int outer = g.comp_lfaces_[c][g.outer_lf_[c]];
      if (g.anchors_[c].root) {
        uf.unite(L, outer);
      } else {
        const AnchorSpec& a = g.anchors_[c];
        uf.unite(g.comp_lfaces_[a.parent_component][a.parent_local_face], outer);
      }
    }
    std::map<int, std::vector<int>> classes;  // uf root -> lface ids (ascending)
    for (int lf = 0; lf < L; ++lf) classes[uf.find(lf)].push_back(lf);
    // Deterministic ids: classes ordered by their smallest local face id,
    // which is trace order.
    std::vector<std::vector<int>> ordered;
    for (auto& [root, members] : classes) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    g.gface_of_lface_.assign(L, -1);
    const int outer_root = (g.n_comps_ > 0) ? uf.find(L) : -1;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      GlobalFace f;
      f.id = static_cast<int>(i);
      std::set<VertexId> boundary;
      for (int lf : ordered[i]) {
        g.gface_of_lface_[lf] = f.id;
        const LocalFace& local = g.lfaces_[lf];
        FaceWalk w;
        if (local.walk.empty()) {
          w.lone_vertex = local.lone_vertex;
          boundary.insert(local.lone_vertex);
        } else {
          w.darts = local.walk;
          f.length += static_cast<int>(local.walk.size());
          for (int d : local.walk) boundary.insert(g.verts_[g.tail_[d]]);
        }
        f.walks.push_back(std::move(w));
      }
      f.boundary.assign(boundary.begin(), boundary.end());
      if (outer_root != -1 && uf.find(ordered[i].front()) == outer_root)
        g.outer_gface_ = f.id;
      g.gfaces_.push_back(std::move(f));
    }
    if (g.n_comps_ > 0 && g.outer_gface_ < 0)
      throw InternalInvariantError("outer global face not found");
  }

  // Distinct-neighbour lists.
  g.nbrs_.assign(n, {});
  for (const Edge& e : g.edges_) {
    if (e.u != e.v) {
      g.nbrs_[g.vidx_[e.u]].push_back(e.v);
      g.nbrs_[g.vidx_[e.v]].push_back(e.u);
    }
  }
  for (auto& nb : g.nbrs_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  return g;
}

PlaneMultigraph PlaneMultigraph::delete_vertices(const std::vector<VertexId>& drop) const {
  std::vector<char> keep_vertex(vertex_count(), 1);
  for (VertexId v : drop) keep_vertex[vertex_index(v)] = 0;
  std::vector<char> keep_edge(edge_count(), 1);
  for (int k = 0; k < edge_count(); ++k)
    if (!keep_vertex[vidx_.at(edges_[k].u)] || !keep_vertex[vidx_.at(edges_[k].v)])
      keep_edge[k] = 0;
  return subgraph(keep_vertex, keep_edge);
}

PlaneMultigraph PlaneMultigraph::delete_edges(const std::vector<EdgeId>& drop) const {
  std::vector<char> keep_edge(edge_count(), 1);
  for (EdgeId e : drop) {
    auto it = eidx_.find(e);
    if (it == eidx_.end()) throw ParseError("unknown edge " + std::to_string(e));
    keep_edge[it->second] = 0;
  }
  return subgraph(std::vector<char>(vertex_count(), 1), keep_edge);
}

// Core of delete_vertices / delete_edges.  The combinatorial part (filtered
// rotations) is easy; the work is recomputing the nesting forest so the
// result describes the same drawing.  Deleting an edge merges the regions on
// its two sides, so new faces correspond to classes of old global faces
// under those merges.  For each new component, the local face bounding its
// surroundings is the one whose region is closest to the unbounded region in
// the dual (every other face of the component is a pocket, strictly farther).
PlaneMultigraph PlaneMultigraph::subgraph(const std::vector<char>& keep_vertex,
                                          const std::vector<char>& keep_edge) const {
  GraphData data;
  for (int vi = 0; vi < vertex_count(); ++vi)
    if (keep_vertex[vi]) data.vertices.push_back(verts_[vi]);
  for (int k = 0; k < edge_count(); ++k)
    if (keep_edge[k]) data.edges.push_back(edges_[k]);
  for (int vi = 0; vi < vertex_count(); ++vi) {
    if (!keep_vertex[vi]) continue;
    std::vector<DartRef> refs;
    for (int d : rot_[vi])
      if (keep_edge[d >> 1]) refs.push_back(dart_ref(d));
    if (!refs.empty()) data.rotations[verts_[vi]] = std::move(refs);
  }
  PlaneMultigraph h = build_graph(data);  // anchors default to root for now
  if (h.n_comps_ == 0) return h;

  // Classes of old global faces merged by the deleted edges.
  UnionFind uf(static_cast<int>(gfaces_.size()));
  for (int k = 0; k < edge_count(); ++k)
    if (!keep_edge[k]) uf.unite(global_face_of_dart(2 * k), global_face_of_dart(2 * k + 1));

  // Old class of every new local face.
  std::vector<int> class_of_lface(h.lfaces_.size(), -1);
  for (std::size_t lf = 0; lf < h.lfaces_.size(); ++lf) {
    const LocalFace& f = h.lfaces_[lf];
    if (!f.walk.empty()) {
      int cls = -1;
      for (int d : f.walk) {
        int old_d = dart_of(h.dart_edge_id(d), h.dart_positive(d));
        int c = uf.find(global_face_of_dart(old_d));
        if (cls == -1) cls = c;
        if (c != cls)
          throw InternalInvariantError("inconsistent face classes along a surviving walk");
      }
      class_of_lface[lf] = cls;
    } else {
      // Isolated in the new graph: all old faces around the vertex have
      // merged (every incident edge died); if it was already isolated, keep
      // its old face's class.
      int vi = vertex_index(f.lone_vertex);
      if (rot_[vi].empty()) {
        class_of_lface[lf] =
            uf.find(gface_of_lface_[comp_lfaces_[comp_of_vertex_[vi]][0]]);
      } else {
        class_of_lface[lf] = uf.find(global_face_of_dart(rot_[vi][0]));
      }
    }
  }

  const int outer_class = uf.find(outer_gface_);

  // BFS over classes through surviving edges: the dual of the new graph.
  std::map<int, int> dist;
  dist[outer_class] = 0;
  std::deque<int> queue{outer_class};
  std::map<int, std::vector<int>> class_adj;
  for (int k = 0; k < edge_count(); ++k) {
    if (!keep_edge[k]) continue;
    int a = uf.find(global_face_of_dart(2 * k));
    int b = uf.find(global_face_of_dart(2 * k + 1));
    class_adj[a].push_back(b);
    class_adj[b].push_back(a);
  }
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int d : class_adj[c]) {
      if (!dist.count(d)) {
        dist[d] = dist[c] + 1;
        queue.push_back(d);
      }
    }
  }

  // Outer local face per new component: unique distance minimiser.
  std::vector<int> new_outer(h.n_comps_, -1);
  for (int c = 0; c < h.n_comps_; ++c) {
    int best = -1, best_dist = std::numeric_limits<int>::max();
    for (int lf : h.comp_lfaces_[c]) {
      auto it = dist.find(class_of_lface[lf]);
      if (it == dist.end())
        throw InternalInvariantError("face region unreachable from the unbounded region");
      if (it->second < best_dist) {
        best_dist = it->second;
        best = lf;
      }
    }
    new_outer[c] = best;
    data.outer_faces[c] = h.lfaces_[best].index_in_component;
  }

  // Anchors: the class of a component's outer face is the region it sits
  // in.  That region's ceiling is the unique member local face that is not
  // its own component's outer face.
  std::map<int, std::pair<int, int>> ceiling;  // class -> (component, lface idx)
  for (int c = 0; c < h.n_comps_; ++c) {
    for (int lf : h.comp_lfaces_[c]) {
      if (lf == new_outer[c]) continue;
      int cls = class_of_lface[lf];
      if (ceiling.count(cls))
        throw InternalInvariantError("two ceiling faces in one region");
      ceiling[cls] = {c, h.lfaces_[lf].index_in_component};
    }
  }
  if (ceiling.count(outer_class))
    throw InternalInvariantError("unbounded region acquired a ceiling");
  for (int c = 0; c < h.n_comps_; ++c) {
    int cls = class_of_lface[new_outer[c]];
    AnchorSpec a;
    if (cls == outer_class) {
      a.root = true;
    } else {
      auto it = ceiling.find(cls);
      if (it == ceiling.end())
        throw InternalInvariantError("bounded region without a ceiling");
      a.root = false;
      a.parent_component = it->second.first;
      a.parent_local_face = it->second.second;
    }
    data.anchors[c] = a;
  }

  return build_graph(data);
}

}  // namespace facehit
