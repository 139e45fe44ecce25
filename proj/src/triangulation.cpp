#include "facehit/triangulation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "facehit/domatic.hpp"
#include "facehit/errors.hpp"
#include "facehit/oracle.hpp"
#include "facehit/rng.hpp"
#include "facehit/verify.hpp"

namespace facehit {

namespace {

constexpr int kExactOracleVertices = 20;

std::vector<VertexId> mis_order(const PlaneMultigraph& g, MisStrategy strategy,
                                std::uint64_t seed) {
  std::vector<VertexId> order = g.vertex_ids();
  switch (strategy) {
    case MisStrategy::min_degree_first:
      std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) < g.degree(b);
      });
      break;
    case MisStrategy::max_degree_first:
      std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) > g.degree(b);
      });
      break;
    case MisStrategy::random_order: {
      SplitMix64 rng(seed);
      rng.shuffle(order);
      break;
    }
  }
  return order;
}

std::vector<VertexId> pick_independent_set(const PlaneMultigraph& g) {
  std::vector<VertexId> best;
  for (MisStrategy s : {MisStrategy::min_degree_first,
                        MisStrategy::max_degree_first,
                        MisStrategy::random_order}) {
    std::vector<VertexId> cand = greedy_mis(g, s, 0);
    if (cand.size() > best.size()) best = std::move(cand);
  }
  if (g.vertex_count() <= kExactOracleVertices) {
    OracleResult exact = max_independent_exact(g);
    if (exact.size > static_cast<int>(best.size())) best = exact.witness;
  }
  return best;
}

}  // namespace

bool is_plane_triangulation(const PlaneMultigraph& g) {
  if (g.vertex_count() < 3) return false;
  if (g.first_self_loop() || g.first_parallel_edge()) return false;
  if (!g.is_connected()) return false;
  for (const GlobalFace& f : g.global_faces())
    if (f.length != 3) return false;
  return true;
}

std::vector<VertexId> greedy_mis(const PlaneMultigraph& g, MisStrategy strategy,
                                 std::uint64_t seed) {
  std::set<VertexId> chosen;
  for (VertexId v : mis_order(g, strategy, seed)) {
    bool blocked = false;
    for (VertexId u : g.neighbors(v))
      if (chosen.count(u)) {
        blocked = true;
        break;
      }
    if (!blocked) chosen.insert(v);
  }
  return {chosen.begin(), chosen.end()};
}

std::pair<std::vector<VertexId>, BoundReport> corollary_dominating_set(
    const PlaneMultigraph& g, std::optional<std::vector<VertexId>> independent) {
  if (!is_plane_triangulation(g))
    throw NotATriangulationError("input is not a simple plane triangulation");

  std::vector<VertexId> mis;
  if (independent) {
    mis = *independent;
    std::sort(mis.begin(), mis.end());
    mis.erase(std::unique(mis.begin(), mis.end()), mis.end());
    for (VertexId v : mis)
      if (!g.has_vertex(v))
        throw UnknownVertexError("independent set names vertex " +
                                 std::to_string(v));
    for (std::size_t i = 0; i < mis.size(); ++i)
      for (std::size_t j = i + 1; j < mis.size(); ++j)
        if (g.adjacent(mis[i], mis[j]))
          throw NotIndependentError(
              "vertices " + std::to_string(mis[i]) + " and " +
              std::to_string(mis[j]) + " are adjacent");
  } else {
    mis = pick_independent_set(g);
  }

  PlaneMultigraph rest = g.delete_vertices(mis);
  // Triangulation facts the partition step relies on: a deleted vertex's
  // neighborhood contains a cycle, so independence keeps every remaining
  // vertex attached, and no deletion can fabricate parallel edges.
  if (rest.first_isolated_vertex() || rest.first_self_loop() ||
      rest.first_forbidden_two_face())
    throw InternalInvariantError(
        "deleting an independent set broke the partition preconditions");

  auto [v1, v2] = theorem_partition(rest);
  std::vector<VertexId> s = v2.size() < v1.size() ? v2 : v1;

  if (!is_dominating(g, s))
    throw InternalInvariantError("smaller class does not dominate the input");

  int n = g.vertex_count();
  BoundReport r;
  r.n = n;
  r.independent_size = static_cast<int>(mis.size());
  r.alpha = Rational(r.independent_size, n);
  r.dominating_size = static_cast<int>(s.size());
  r.bound_mt = Rational(n, 3);
  r.bound_crr = Rational(2 * n, 7);
  r.bound_ours = Rational(n - r.independent_size, 2);
  if ((Rational(1, 1) - r.alpha) * Rational(n, 2) != r.bound_ours)
    throw InternalInvariantError("bound arithmetic disagrees");
  if (r.dominating_size > r.bound_ours.floor())
    throw InternalInvariantError("dominating set exceeds its bound");
  if (n <= kExactOracleVertices)
    r.gamma_exact = min_dominating_exact(g).size;
  r.winner = r.bound_ours < r.bound_crr ? "ours" : "crr";
  return {std::move(s), std::move(r)};
}

BoundSummary compare_bounds(const std::vector<BoundReport>& reports) {
  BoundSummary sum;
  sum.instances = static_cast<int>(reports.size());
  if (reports.empty()) return sum;
  int alpha_beats = 0;
  int mis_below = 0;
  Rational total{0, 1};
  for (const BoundReport& r : reports) {
    if (r.alpha > Rational(3, 7)) ++alpha_beats;
    if (Rational(r.independent_size, 1) < r.bound_crr) ++mis_below;
    total = total + Rational(r.dominating_size, r.n);
  }
  sum.fraction_alpha_beats_crr = Rational(alpha_beats, sum.instances);
  sum.fraction_mis_below_crr = Rational(mis_below, sum.instances);
  sum.mean_ratio = total * Rational(1, sum.instances);
  return sum;
}

std::string bound_csv_header() {
  return "n,independent_size,alpha,dominating_size,bound_mt,bound_crr,"
         "bound_ours,gamma_exact,winner";
}

std::string bound_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.independent_size << ',' << r.alpha.str() << ','
      << r.dominating_size << ',' << r.bound_mt.str() << ','
      << r.bound_crr.str() << ',' << r.bound_ours.str() << ',';
  if (r.gamma_exact) out << *r.gamma_exact;
  out << ',' << r.winner;
  return out.str();
}

}  // namespace facehit
