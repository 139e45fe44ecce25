#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "facehit/plane_graph.hpp"
#include "facehit/plg.hpp"

namespace facehit {

// A graph together with the chords added to it.  `graph` extends `base` in
// the same embedding; every edge of `graph` is classified TRUE (present in
// the base) or DUMMY (added).  Deleting the dummy edges recovers the base
// exactly, rotations included.
struct AugmentedGraph {
  PlaneMultigraph base;
  PlaneMultigraph graph;
  std::map<EdgeId, EdgeKind> edge_kind;  // total over graph edges
};

// An angle at `apex` between two cyclically consecutive TRUE darts leading
// to two distinct vertices.  `occupied` counts the dummy darts lying
// strictly between the arms in the rotation at the apex.
struct TrueAngle {
  VertexId apex;
  int arm_a;  // dart id in graph, tail == apex
  int arm_b;  // the next TRUE dart clockwise
  int occupied;
};

// Derived bookkeeping: which vertices and base faces are happy, the dummy
// edges at each vertex, and per dummy the vertices whose happiness depends
// on it.
struct HappinessLedger {
  std::set<VertexId> happy_vertices;
  std::set<int> happy_faces;  // happy base faces of length >= 3
  std::map<VertexId, std::vector<EdgeId>> dummy_at;
  std::map<EdgeId, std::vector<VertexId>> made_happy_by;
};

enum class SatisfyOutcome { made_happy, no_free_angle };

struct SatisfyResult {
  SatisfyOutcome outcome;
  AugmentedGraph result;  // unchanged input when no angle was free
};

// Wraps a graph with an empty augmentation (every edge TRUE).
AugmentedGraph make_augmented(const PlaneMultigraph& base);

// A vertex is happy when two of its TRUE neighbors are adjacent in the
// augmented graph, i.e. it lies on a triangle with two true edges.
bool is_vertex_happy(const AugmentedGraph& a, VertexId v);

// A base face is happy when the subgraph induced on its boundary vertex set
// contains a triangle on three distinct vertices.
bool is_face_happy(const AugmentedGraph& a, int base_face);

// All true angles at v, in rotation order.  Requires base degree >= 2.
std::vector<TrueAngle> true_angles(const AugmentedGraph& a, VertexId v);

// Inserts a dummy chord u-w across a corner of the given face of a.graph
// (u and w at walk distance two via TRUE edges).
AugmentedGraph add_dummy_chord(const AugmentedGraph& a, int face, VertexId u,
                               VertexId w);

// Makes every 3+-face of the base happy; at most one chord per face.
AugmentedGraph satisfy_faces(const AugmentedGraph& a);

// Chords the first free angle at the unhappy vertex v, if any.
SatisfyResult satisfy_vertex(const AugmentedGraph& a, VertexId v);

// Deletes one dummy edge whose removal keeps every currently-happy vertex
// and every 3+ base face happy; nullopt when no dummy is redundant.
std::optional<AugmentedGraph> remove_redundant_dummy(const AugmentedGraph& a);

// Moves the unhappiness of v to its TRUE neighbor u: removes a dummy at v
// whose loss unhappies only u, then chords the freed angle to make v happy.
// Requires every angle at v occupied; throws NoTransferEdgeError otherwise
// or when no dummy at v transfers onto u cleanly.
AugmentedGraph shift_unhappiness(const AugmentedGraph& a, VertexId v,
                                 VertexId u);

HappinessLedger compute_ledger(const AugmentedGraph& a);

std::vector<VertexId> unhappy_vertices(const AugmentedGraph& a);

// Full pipeline: satisfy the faces, then drive the unhappy-vertex count to
// at most one via free-angle chords, redundancy removal, and stepwise
// shifting along shortest true paths.  Budget: 10*(|V|+|E|) changes, then
// NonConvergenceError.  Requires connected, loopless, min degree >= 2.
AugmentedGraph augment(const PlaneMultigraph& g);

}  // namespace facehit
