#pragma once

#include <map>
#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

enum class Color { A, B };

inline Color opposite(Color c) { return c == Color::A ? Color::B : Color::A; }

/// Total assignment V(G) -> {A, B}.
struct TwoColoring {
  std::map<VertexId, Color> assignment;

  Color at(VertexId v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw BadParameterError("coloring has no entry for vertex " + std::to_string(v));
    return it->second;
  }
  std::vector<VertexId> class_of(Color c) const {
    std::vector<VertexId> out;
    for (const auto& [v, col] : assignment)
      if (col == c) out.push_back(v);
    return out;
  }
};

enum class ViolationKind {
  vertex_not_dominated_by_a,
  vertex_not_dominated_by_b,
  face_missing_a,
  face_missing_b,
};

struct Violation {
  ViolationKind kind;
  long long id;     // vertex id or global face id
  int face_length;  // -1 for vertex violations
};

/// Result of checking a 2-coloring against the graph: both classes
/// dominating (domatic), every face bichromatic (polychromatic), every face
/// of length >= 3 bichromatic (the relaxation used for graphs that still
/// contain 2-faces).
struct ColoringAudit {
  bool domatic = true;
  bool polychromatic = true;
  bool polychromatic_3plus = true;
  std::vector<Violation> violations;
};

/// True iff every vertex outside S has a neighbor in S.
bool is_dominating(const PlaneMultigraph& g, const std::vector<VertexId>& s);

/// True iff every global face's boundary vertex set meets S (isolated
/// vertices lying in a face belong to its boundary set).
bool is_face_hitting(const PlaneMultigraph& g, const std::vector<VertexId>& s);

/// Audits a total 2-coloring; throws BadParameterError when the coloring
/// misses a vertex of g and UnknownVertexError when it colors a stranger.
ColoringAudit audit_two_coloring(const PlaneMultigraph& g, const TwoColoring& c);

}  // namespace facehit
