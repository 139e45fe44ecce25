#pragma once

#include <map>
#include <utility>
#include <vector>

#include "facehit/plane_graph.hpp"

namespace facehit {

// Abstract simple graph: vertex ids plus deduplicated undirected edges.
struct SimpleGraph {
  std::vector<VertexId> vertices;                    // ascending
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, ascending, unique
};

struct FourColoring {
  std::map<VertexId, int> assignment;  // vertex -> {1,2,3,4}
  int at(VertexId v) const;
};

// Collapses parallel edges.  Throws PreconditionError on a self-loop.
SimpleGraph to_simple(const PlaneMultigraph& g);

// Proper 4-coloring by recursive low-degree removal with Kempe-chain
// recoloring on reinsertion; exhaustive saturation-ordered backtracking as
// the fallback.  Deterministic (ties by vertex id).  Throws
// InternalInvariantError if the input is not 4-colorable, which cannot
// happen for planar graphs.
FourColoring four_color(const SimpleGraph& g);

// True iff no edge of g joins two equal colors.  The coloring must assign
// every vertex of g.
bool verify_proper(const SimpleGraph& g, const FourColoring& c);

}  // namespace facehit
