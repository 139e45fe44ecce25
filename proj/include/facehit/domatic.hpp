#pragma once

#include <utility>
#include <vector>

#include "facehit/plane_graph.hpp"
#include "facehit/verify.hpp"

namespace facehit {

// One pendant deletion: the vertex removed, the neighbor it hung from, and
// every incident edge taken with it (parallel pendant edges travel together).
struct TrimStep {
  VertexId pendant;
  VertexId parent;
  std::vector<EdgeId> removed_edges;
};

// Deletions in order; replaying the steps backwards reconstructs the
// original graph from the core.
struct TrimRecord {
  std::vector<TrimStep> steps;
};

enum class CoreComponentKind { nontrivial, trivial_isolated };
enum class ColoringSource { lemma, arbitrary };

// How each core component gets its colors: components of minimum degree two
// or more go through the lemma pipeline, isolated vertices take an
// arbitrary color.  Trimming leaves no other component shape.
struct ComponentPlanEntry {
  CoreComponentKind kind;
  ColoringSource source;
};

// Repeatedly removes the smallest-id vertex with exactly one distinct
// neighbor until none remains.  Never changes the component count.
std::pair<PlaneMultigraph, TrimRecord> trim(const PlaneMultigraph& g);

// Classifies the components of a trimmed core; throws if a degree-one
// vertex slipped through.
std::vector<ComponentPlanEntry> plan_components(const PlaneMultigraph& core);

// Two-coloring of a connected loopless graph with minimum degree two whose
// classes both dominate and hit every face of length three or more.
// Pipeline: augment to happiness, properly 4-color the augmented simple
// graph with the unhappy vertex (if any) forced to a class opposite one of
// its neighbors, then merge color pairs.  If augmentation fails to converge
// the exact search takes over for graphs of at most 20 vertices.
TwoColoring lemma_coloring(const PlaneMultigraph& g);

// Two-coloring of any plane multigraph without isolated vertices,
// self-loops, or 2-faces whose classes both dominate and hit every face.
// Pipeline: trim pendants, color the core per component, reinsert pendants
// opposite their parents, then repair monochromatic faces bottom-up by
// flipping nested component subtrees.
TwoColoring theorem_coloring(const PlaneMultigraph& g);

// The two classes of theorem_coloring, each verified dominating and
// face-hitting; min(|V1|, |V2|) <= n/2.
std::pair<std::vector<VertexId>, std::vector<VertexId>> theorem_partition(
    const PlaneMultigraph& g);

}  // namespace facehit
