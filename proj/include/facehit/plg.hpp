#pragma once

#include <map>
#include <string>

#include "facehit/plane_graph.hpp"

namespace facehit {

// Edge annotation carried by augmented graphs: edges of the input vs edges
// added to certify happiness.
enum class EdgeKind { true_edge, dummy_edge };

// A parsed .plg document: the embedding data plus optional per-edge kind
// annotations (present only when the file carries `kind` lines).
struct PlgDocument {
  GraphData data;
  std::map<EdgeId, EdgeKind> kinds;
};

// Text format, one directive per line, '#' starts a comment:
//   plg 1
//   v <vertex-id>
//   e <edge-id> <u> <v>
//   rot <vertex-id> <edge-id>[+-] ...   counter-clockwise around the vertex
//   anchor <component> root
//   anchor <component> in <component> <local-face-index>
//   outer <component> <local-face-index>
//   kind <edge-id> true|dummy
// Components are indexed by ascending smallest vertex id; local faces by
// trace order.  Missing anchor lines default to root; a missing outer line
// picks local face 0.
PlgDocument parse_plg(const std::string& text);

// Canonical serialization: vertices and edges ascending, each rotation
// starting from its smallest dart token, anchor lines for every component
// listed in `data.anchors`, outer lines only where the outer face is not
// local face 0.  Two graphs with equal canonical data serialize to
// byte-identical text.
std::string write_plg(const GraphData& data);
std::string write_plg(const GraphData& data, const std::map<EdgeId, EdgeKind>& kinds);

// Graphviz export.  Optional fill colors per vertex; dummy edges render
// dashed.
std::string write_dot(const GraphData& data,
                      const std::map<VertexId, std::string>& vertex_color = {},
                      const std::map<EdgeId, EdgeKind>& kinds = {});

}  // namespace facehit
