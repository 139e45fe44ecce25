#pragma once

#include <optional>
#include <vector>

#include "facehit/plane_graph.hpp"
#include "facehit/verify.hpp"

namespace facehit {

/// Caps for the exponential-time exact solvers.
struct OracleBudget {
  int max_vertices = 20;
  long long max_nodes = 10'000'000;
};

struct OracleResult {
  int size = 0;
  std::vector<VertexId> witness;  // sorted
};

/// Minimum dominating set by branch and bound over closed-neighborhood
/// covers (greedy upper bound, uncovered/max-coverage lower bound).
OracleResult min_dominating_exact(const PlaneMultigraph& g, const OracleBudget& budget = {});

/// Minimum face-hitting set: smallest vertex set meeting every global
/// face's boundary (set-cover branch and bound).
OracleResult min_face_hitting_exact(const PlaneMultigraph& g, const OracleBudget& budget = {});

/// Maximum independent set (exact); used to squeeze the best alpha out of
/// small triangulations.
OracleResult max_independent_exact(const PlaneMultigraph& g, const OracleBudget& budget = {});

/// Exhaustive search (with unit propagation, first vertex pinned to break
/// the color-swap symmetry) for a 2-coloring that is domatic and
/// polychromatic; with `require_3plus_only`, faces of length < 3 may be
/// monochromatic.  Returns nothing when no such coloring exists.
std::optional<TwoColoring> exists_dp_two_coloring(const PlaneMultigraph& g,
                                                  bool require_3plus_only,
                                                  const OracleBudget& budget = {});

/// Second opinion on a candidate coloring via the oracle's constraint view
/// (every closed neighborhood and every qualifying face must see both
/// colors); used for differential testing against audit_two_coloring.
bool oracle_coloring_ok(const PlaneMultigraph& g, const TwoColoring& c,
                        bool require_3plus_only);

}  // namespace facehit
