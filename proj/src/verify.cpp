#include "facehit/verify.hpp"

#include <algorithm>
#include <set>

namespace facehit {

bool is_dominating(const PlaneMultigraph& g, const std::vector<VertexId>& s) {
  std::set<VertexId> in_s;
  for (VertexId v : s) {
    g.vertex_index(v);  // throws UnknownVertexError for strangers
    in_s.insert(v);
  }
  for (VertexId v : g.vertex_ids()) {
    if (in_s.count(v)) continue;
    bool seen = false;
    for (VertexId u : g.neighbors(v))
      if (in_s.count(u)) {
        seen = true;
        break;
      }
    if (!seen) return false;
  }
  return true;
}

bool is_face_hitting(const PlaneMultigraph& g, const std::vector<VertexId>& s) {
  std::set<VertexId> in_s;
  for (VertexId v : s) {
    g.vertex_index(v);
    in_s.insert(v);
  }
  for (const GlobalFace& f : g.global_faces()) {
    bool hit = false;
    for (VertexId v : f.boundary)
      if (in_s.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

ColoringAudit audit_two_coloring(const PlaneMultigraph& g, const TwoColoring& c) {
  for (const auto& [v, color] : c.assignment) g.vertex_index(v);
  ColoringAudit audit;
  for (VertexId v : g.vertex_ids()) {
    Color mine = c.at(v);  // throws when not total
    Color needed = opposite(mine);
    bool seen = false;
    for (VertexId u : g.neighbors(v))
      if (c.at(u) == needed) {
        seen = true;
        break;
      }
    if (!seen) {
      audit.domatic = false;
      audit.violations.push_back({needed == Color::A
                                      ? ViolationKind::vertex_not_dominated_by_a
                                      : ViolationKind::vertex_not_dominated_by_b,
                                  v, -1});
    }
  }
  for (const GlobalFace& f : g.global_faces()) {
    bool has_a = false, has_b = false;
    for (VertexId v : f.boundary) (c.at(v) == Color::A ? has_a : has_b) = true;
    if (has_a && has_b) continue;
    audit.polychromatic = false;
    if (f.length >= 3) audit.polychromatic_3plus = false;
    audit.violations.push_back(
        {has_a ? ViolationKind::face_missing_b : ViolationKind::face_missing_a, f.id,
         f.length});
  }
  return audit;
}

}  // namespace facehit
