#include "facehit/domatic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "facehit/augment.hpp"
#include "facehit/errors.hpp"
#include "facehit/fourcolor.hpp"
#include "facehit/oracle.hpp"

namespace facehit {

namespace {

constexpr int kOracleFallbackVertices = 20;

// Anchor-forest depth of every component (roots at zero).
std::vector<int> component_depths(const PlaneMultigraph& g) {
  int nc = g.component_count();
  std::vector<int> depth(nc, -1);
  for (int c = 0; c < nc; ++c) {
    int d = 0;
    for (int at = c; !g.anchor(at).root; at = g.anchor(at).parent_component) ++d;
    depth[c] = d;
  }
  return depth;
}

// Vertices of the component subtree rooted at c in the anchor forest.
std::set<VertexId> subtree_vertices(const PlaneMultigraph& g, int c0) {
  int nc = g.component_count();
  std::vector<std::vector<int>> kids(nc);
  for (int c = 0; c < nc; ++c)
    if (!g.anchor(c).root) kids[g.anchor(c).parent_component].push_back(c);
  std::set<VertexId> out;
  std::vector<int> stack{c0};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (VertexId v : g.component_vertices(c)) out.insert(v);
    for (int k : kids[c]) stack.push_back(k);
  }
  return out;
}

// Repairs monochromatic faces by flipping the colors of one interior
// component's subtree, innermost faces first so later flips move already
// repaired regions as a whole.
void apply_component_flips(const PlaneMultigraph& g, TwoColoring& psi) {
  std::vector<int> cdepth = component_depths(g);
  int nfaces = static_cast<int>(g.global_faces().size());

  // A component is an interior component of the face its outer local face
  // merged into (for roots, the unbounded face).
  std::map<int, std::vector<int>> interior;
  for (int c = 0; c < g.component_count(); ++c) {
    int lf = g.local_face_id(c, g.outer_local_face(c));
    interior[g.global_face_of_local(lf)].push_back(c);
  }

  // Face depth: one below the host component, where the host contributes
  // the only non-outer local face of the merge.  The unbounded face has no
  // host and stays at depth zero.
  std::vector<int> fdepth(nfaces, 0);
  for (int lf = 0; lf < static_cast<int>(g.local_faces().size()); ++lf) {
    const LocalFace& local = g.local_faces()[lf];
    if (local.index_in_component == g.outer_local_face(local.component)) continue;
    fdepth[g.global_face_of_local(lf)] = cdepth[local.component] + 1;
  }

  std::vector<int> order(nfaces);
  for (int f = 0; f < nfaces; ++f) order[f] = f;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (fdepth[a] != fdepth[b]) return fdepth[a] > fdepth[b];
    return a < b;
  });

  for (int f : order) {
    const GlobalFace& face = g.global_faces()[f];
    bool has_a = false;
    bool has_b = false;
    for (VertexId v : face.boundary)
      (psi.at(v) == Color::A ? has_a : has_b) = true;
    if ((has_a && has_b) || face.boundary.empty()) continue;
    bool repaired = false;
    auto it = interior.find(f);
    if (it != interior.end()) {
      for (int c : it->second) {
        std::set<VertexId> sub = subtree_vertices(g, c);
        bool keeps_one = false;
        for (VertexId v : face.boundary)
          if (!sub.count(v)) {
            keeps_one = true;
            break;
          }
        if (!keeps_one) continue;  // flipping everything changes nothing
        for (VertexId v : sub)
          psi.assignment[v] = opposite(psi.assignment[v]);
        repaired = true;
        break;
      }
    }
    if (!repaired)
      throw InternalInvariantError("monochromatic face " + std::to_string(f) +
                                   " has no flippable interior component");
  }
}

}  // namespace

std::pair<PlaneMultigraph, TrimRecord> trim(const PlaneMultigraph& g) {
  PlaneMultigraph cur = g;
  TrimRecord record;
  while (true) {
    VertexId pick = -1;
    for (VertexId v : cur.vertex_ids())
      if (cur.degree(v) == 1) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    TrimStep step{pick, cur.neighbors(pick)[0], {}};
    for (const Edge& e : cur.edges())
      if (e.u == pick || e.v == pick) step.removed_edges.push_back(e.id);
    record.steps.push_back(std::move(step));
    cur = cur.delete_vertices({pick});
  }
  return {std::move(cur), std::move(record)};
}

std::vector<ComponentPlanEntry> plan_components(const PlaneMultigraph& core) {
  std::vector<ComponentPlanEntry> plan;
  for (int c = 0; c < core.component_count(); ++c) {
    const std::vector<VertexId>& verts = core.component_vertices(c);
    if (verts.size() == 1) {
      plan.push_back({CoreComponentKind::trivial_isolated, ColoringSource::arbitrary});
      continue;
    }
    for (VertexId v : verts)
      if (core.degree(v) < 2)
        throw InternalInvariantError("trimmed core keeps degree-one vertex " +
                                     std::to_string(v));
    plan.push_back({CoreComponentKind::nontrivial, ColoringSource::lemma});
  }
  return plan;
}

TwoColoring lemma_coloring(const PlaneMultigraph& g) {
  AugmentedGraph a;
  try {
    a = augment(g);
  } catch (const NonConvergenceError&) {
    if (g.vertex_count() > kOracleFallbackVertices) throw;
    auto found = exists_dp_two_coloring(g, /*require_3plus_only=*/true);
    if (!found)
      throw InternalInvariantError(
          "no domatic coloring hitting all big faces exists for an eligible "
          "input");
    return *found;
  }

  FourColoring phi = four_color(to_simple(a.graph));
  // rename[c] is the final name of color c; force the unhappy vertex (if
  // any) into the class of color 1 with a neighbor renamed to color 2, so
  // the merge below leaves it dominated by both classes.
  std::array<int, 5> rename{0, 1, 2, 3, 4};
  std::vector<VertexId> unhappy = unhappy_vertices(a);
  if (!unhappy.empty()) {
    VertexId v = unhappy[0];
    int cv = phi.at(v);
    for (int c = 1; c <= 4; ++c)
      if (rename[c] == 1) {
        std::swap(rename[cv], rename[c]);
        break;
      }
    VertexId u = a.base.neighbors(v)[0];
    int cu = phi.at(u);
    for (int c = 1; c <= 4; ++c)
      if (rename[c] == 2) {
        std::swap(rename[cu], rename[c]);
        break;
      }
  }

  TwoColoring psi;
  for (VertexId v : g.vertex_ids()) {
    int c = rename[phi.at(v)];
    psi.assignment[v] = (c == 1 || c == 3) ? Color::A : Color::B;
  }
  ColoringAudit audit = audit_two_coloring(g, psi);
  if (!audit.domatic || !audit.polychromatic_3plus)
    throw InternalInvariantError("merged coloring failed its audit");
  return psi;
}

TwoColoring theorem_coloring(const PlaneMultigraph& g) {
  if (auto iso = g.first_isolated_vertex())
    throw PreconditionError("isolated-vertex", *iso,
                            "vertex " + std::to_string(*iso) + " is isolated");
  if (auto loop = g.first_self_loop())
    throw PreconditionError("self-loop", *loop,
                            "edge " + std::to_string(*loop) +
                                " is a self-loop");
  if (auto lens = g.first_forbidden_two_face())
    throw PreconditionError("2-face", *lens,
                            "face " + std::to_string(*lens) +
                                " has length two");

  auto [core, record] = trim(g);
  std::vector<ComponentPlanEntry> plan = plan_components(core);

  TwoColoring psi;
  for (int c = 0; c < core.component_count(); ++c) {
    const std::vector<VertexId>& verts = core.component_vertices(c);
    if (plan[c].kind == CoreComponentKind::trivial_isolated) {
      psi.assignment[verts[0]] = Color::A;
      continue;
    }
    std::vector<VertexId> drop;
    for (VertexId v : core.vertex_ids())
      if (core.component_of(v) != c) drop.push_back(v);
    TwoColoring part = lemma_coloring(core.delete_vertices(drop));
    psi.assignment.insert(part.assignment.begin(), part.assignment.end());
  }

  for (auto it = record.steps.rbegin(); it != record.steps.rend(); ++it)
    psi.assignment[it->pendant] = opposite(psi.at(it->parent));

  apply_component_flips(g, psi);

  ColoringAudit audit = audit_two_coloring(g, psi);
  if (!audit.domatic || !audit.polychromatic)
    throw InternalInvariantError("final coloring failed its audit");
  return psi;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> theorem_partition(
    const PlaneMultigraph& g) {
  TwoColoring psi = theorem_coloring(g);
  std::vector<VertexId> v1 = psi.class_of(Color::A);
  std::vector<VertexId> v2 = psi.class_of(Color::B);
  if (!is_dominating(g, v1) || !is_dominating(g, v2) ||
      !is_face_hitting(g, v1) || !is_face_hitting(g, v2))
    throw InternalInvariantError("partition classes failed verification");
  if (static_cast<int>(std::min(v1.size(), v2.size())) > g.vertex_count() / 2)
    throw InternalInvariantError("partition classes are impossibly unbalanced");
  return {std::move(v1), std::move(v2)};
}

}  // namespace facehit
