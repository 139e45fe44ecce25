#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facehit/plane_graph.hpp"
#include "facehit/rational.hpp"

namespace facehit {

// Vertex orders for the greedy maximal-independent-set pass.
enum class MisStrategy { min_degree_first, max_degree_first, random_order };

// Per-instance record comparing the dominating set produced by
// corollary_dominating_set against the classic worst-case bounds.
struct BoundReport {
  int n = 0;                      // vertices in the triangulation
  int independent_size = 0;       // |I|
  Rational alpha{0, 1};           // |I| / n
  int dominating_size = 0;        // |S|
  Rational bound_mt{0, 1};        // n/3
  Rational bound_crr{0, 1};       // 2n/7
  Rational bound_ours{0, 1};      // (1 - alpha) * n / 2
  std::optional<int> gamma_exact; // oracle domination number, small n only
  std::string winner;             // smallest bound: "ours" or "crr", ties to
                                  // "crr" ("mt" never wins: 2n/7 < n/3)
};

// Aggregate over a batch of reports; fractions are exact.
struct BoundSummary {
  int instances = 0;
  Rational fraction_alpha_beats_crr{0, 1};  // alpha > 3/7, so ours < 2n/7
  Rational fraction_mis_below_crr{0, 1};    // |I| < 2n/7
  Rational mean_ratio{0, 1};                // mean of |S| / n
};

// True iff g is a simple plane triangulation: no self-loops, no parallel
// edges, connected, at least three vertices, and every global face (the
// outer one included) bounded by exactly three edges.
bool is_plane_triangulation(const PlaneMultigraph& g);

// Maximal independent set by greedy insertion.  Vertices are visited in
// (degree, id) order — ascending or descending degree per the strategy — or
// in a seeded shuffle for random_order; the seed is ignored otherwise.
std::vector<VertexId> greedy_mis(const PlaneMultigraph& g, MisStrategy strategy,
                                 std::uint64_t seed = 0);

// Dominating set of a plane triangulation with at most (n - |I|)/2
// vertices: delete an independent set I, two-color what remains so both
// classes dominate it and hit all its faces, and keep the smaller class.
// Every deleted vertex ends up dominated because its neighborhood bounds a
// face of the remainder, which the class hits.  When `independent` is
// absent the largest of the greedy sets (plus the exact optimum on small
// inputs) is used.  Throws NotATriangulationError or NotIndependentError.
std::pair<std::vector<VertexId>, BoundReport> corollary_dominating_set(
    const PlaneMultigraph& g,
    std::optional<std::vector<VertexId>> independent = std::nullopt);

BoundSummary compare_bounds(const std::vector<BoundReport>& reports);

// CSV serialization for report batches; fractions print as "p/q".
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

}  // namespace facehit
