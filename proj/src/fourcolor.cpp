#include "facehit/fourcolor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "facehit/errors.hpp"

namespace facehit {

namespace {

class Solver {
 public:
  explicit Solver(const SimpleGraph& g) {
    ids_ = g.vertices;
    n_ = static_cast<int>(ids_.size());
    adj_.assign(n_, {});
    for (auto [u, v] : g.edges) {
      int ui = index_of(u);
      int vi = index_of(v);
      adj_[ui].push_back(vi);
      adj_[vi].push_back(ui);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    color_.assign(n_, 0);
  }

  FourColoring run() {
    if (!reduce_and_reinsert()) backtrack_all();
    FourColoring out;
    for (int i = 0; i < n_; ++i) out.assignment[ids_[i]] = color_[i];
    return out;
  }

 private:
  int index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    return static_cast<int>(it - ids_.begin());
  }

  // Peel low-degree vertices, then recolor greedily on reinsertion with
  // Kempe-chain rescue attempts.  Returns false when some reinsertion gets
  // stuck, in which case the caller falls back to exhaustive search.
  bool reduce_and_reinsert() {
    std::vector<int> deg(n_);
    std::vector<bool> alive(n_, true);
    for (int i = 0; i < n_; ++i) deg[i] = static_cast<int>(adj_[i].size());
    std::vector<int> order;
    order.reserve(n_);
    for (int round = 0; round < n_; ++round) {
      int pick = -1;
      for (int i = 0; i < n_; ++i)
        if (alive[i] && deg[i] <= 5) {
          pick = i;
          break;
        }
      if (pick < 0)       // not planar; take the smallest id anyway
        for (int i = 0; i < n_ && pick < 0; ++i)
          if (alive[i]) pick = i;
      alive[pick] = false;
      order.push_back(pick);
      for (int w : adj_[pick])
        if (alive[w]) --deg[w];
    }
    std::fill(color_.begin(), color_.end(), 0);
    for (int k = n_ - 1; k >= 0; --k)
      if (!place(order[k])) return false;
    return true;
  }

  bool place(int v) {
    int f = free_color(v);
    if (f > 0) {
      color_[v] = f;
      return true;
    }
    // All four colors appear among the colored neighbors: try Kempe chains.
    for (int alpha = 1; alpha <= 4; ++alpha)
      for (int beta = 1; beta <= 4; ++beta) {
        if (alpha == beta) continue;
        for (int a : adj_[v]) {
          if (color_[a] != alpha) continue;
          std::vector<int> chain = kempe_component(a, alpha, beta);
          bool touches_beta_neighbor = false;
          for (int w : adj_[v])
            if (color_[w] == beta &&
                std::binary_search(chain.begin(), chain.end(), w)) {
              touches_beta_neighbor = true;
              break;
            }
          if (touches_beta_neighbor) continue;
          flip(chain, alpha, beta);
          int freed = free_color(v);
          if (freed > 0) {
            color_[v] = freed;
            return true;
          }
          flip(chain, alpha, beta);  // no use; restore
        }
      }
    return false;
  }

  int free_color(int v) const {
    bool used[5] = {false, false, false, false, false};
    for (int w : adj_[v])
      if (color_[w] != 0) used[color_[w]] = true;
    for (int c = 1; c <= 4; ++c)
      if (!used[c]) return c;
    return 0;
  }

  // Connected component of `start` within the colored {alpha,beta}-subgraph,
  // returned sorted.
  std::vector<int> kempe_component(int start, int alpha, int beta) const {
    std::vector<int> comp{start};
    std::vector<bool> seen(n_, false);
    seen[start] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int w : adj_[comp[head]]) {
        if (seen[w] || (color_[w] != alpha && color_[w] != beta)) continue;
        seen[w] = true;
        comp.push_back(w);
      }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  void flip(const std::vector<int>& chain, int alpha, int beta) {
    for (int w : chain) color_[w] = (color_[w] == alpha) ? beta : alpha;
  }

  // Exhaustive search, highest saturation first, ties to the smallest id.
  void backtrack_all() {
    std::fill(color_.begin(), color_.end(), 0);
    if (!backtrack(0))
      throw InternalInvariantError(
          "no proper 4-coloring exists; the input cannot be planar");
  }

  bool backtrack(int placed) {
    if (placed == n_) return true;
    int best = -1;
    int best_sat = -1;
    for (int i = 0; i < n_; ++i) {
      if (color_[i] != 0) continue;
      bool used[5] = {false, false, false, false, false};
      int sat = 0;
      for (int w : adj_[i])
        if (color_[w] != 0 && !used[color_[w]]) {
          used[color_[w]] = true;
          ++sat;
        }
      if (sat > best_sat) {
        best_sat = sat;
        best = i;
      }
    }
    for (int c = 1; c <= 4; ++c) {
      bool ok = true;
      for (int w : adj_[best])
        if (color_[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[best] = c;
      if (backtrack(placed + 1)) return true;
      color_[best] = 0;
    }
    return false;
  }

  int n_ = 0;
  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
};

}  // namespace

int FourColoring::at(VertexId v) const {
  auto it = assignment.find(v);
  if (it == assignment.end())
    throw BadParameterError("no color assigned to vertex " + std::to_string(v));
  return it->second;
}

SimpleGraph to_simple(const PlaneMultigraph& g) {
  if (auto loop = g.first_self_loop())
    throw PreconditionError("self-loop", *loop,
                            "edge " + std::to_string(*loop) +
                                " is a self-loop; simplification requires a "
                                "loopless graph");
  SimpleGraph s;
  s.vertices = g.vertex_ids();
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges())
    seen.insert(std::minmax(e.u, e.v));
  s.edges.assign(seen.begin(), seen.end());
  return s;
}

FourColoring four_color(const SimpleGraph& g) {
  return Solver(g).run();
}

bool verify_proper(const SimpleGraph& g, const FourColoring& c) {
  for (auto [u, v] : g.edges)
    if (c.at(u) == c.at(v)) return false;
  return true;
}

}  // namespace facehit
