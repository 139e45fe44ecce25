#include "facehit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace facehit {

namespace {

void check_budget(const PlaneMultigraph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices)
    throw BudgetExceededError("exact oracle limited to " +
                              std::to_string(budget.max_vertices) + " vertices, got " +
                              std::to_string(g.vertex_count()));
}

struct NodeCounter {
  long long used = 0;
  long long cap;
  explicit NodeCounter(long long cap_) : cap(cap_) {}
  void tick() {
    if (++used > cap) throw BudgetExceededError("oracle search-node budget exhausted");
  }
};

std::vector<VertexId> indices_to_ids(const PlaneMultigraph& g, std::uint64_t mask) {
  std::vector<VertexId> out;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (mask >> i & 1) out.push_back(g.vertex_ids()[i]);
  return out;
}

// --- minimum dominating set -------------------------------------------------

struct DomSearch {
  int n;
  std::vector<std::uint64_t> closed;  // closed neighborhood masks
  int max_cover;
  std::uint64_t best_mask = 0;
  int best_size = 0;
  NodeCounter nodes;

  DomSearch(const PlaneMultigraph& g, long long cap) : nodes(cap) {
    n = g.vertex_count();
    closed.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      closed[i] |= std::uint64_t{1} << i;
      for (VertexId u : g.neighbors(g.vertex_ids()[i]))
        closed[i] |= std::uint64_t{1} << g.vertex_index(u);
    }
    max_cover = 1;
    for (int i = 0; i < n; ++i)
      max_cover = std::max(max_cover, std::popcount(closed[i]));
    greedy_seed();
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    descend(0, all, 0);
  }

  void greedy_seed() {
    std::uint64_t undominated = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t chosen = 0;
    int size = 0;
    while (undominated) {
      int pick = -1, gain = -1;
      for (int i = 0; i < n; ++i) {
        int covers = std::popcount(closed[i] & undominated);
        if (covers > gain) {
          gain = covers;
          pick = i;
        }
      }
      chosen |= std::uint64_t{1} << pick;
      undominated &= ~closed[pick];
      ++size;
    }
    best_mask = chosen;
    best_size = size;
  }

  void descend(std::uint64_t chosen_mask, std::uint64_t undominated, int size) {
    nodes.tick();
    if (!undominated) {
      if (size < best_size) {
        best_size = size;
        best_mask = chosen_mask;
      }
      return;
    }
    int lower = (std::popcount(undominated) + max_cover - 1) / max_cover;
    if (size + lower >= best_size) return;
    int v = std::countr_zero(undominated);  // smallest-index undominated vertex
    // Someone in N[v] must be chosen; try candidates in index order.
    for (int i = 0; i < n; ++i) {
      if (!(closed[v] >> i & 1)) continue;
      descend(chosen_mask | (std::uint64_t{1} << i), undominated & ~closed[i], size + 1);
    }
  }
};

// --- minimum face hitting set -----------------------------------------------

struct HitSearch {
  int n;
  std::vector<std::uint64_t> face_mask;       // per face: boundary vertex indices
  std::vector<std::vector<int>> vertex_faces; // per vertex: face ids it touches
  int max_hits;
  std::vector<int> hit_count;  // per face: how many chosen vertices touch it
  int unhit;
  std::uint64_t best_mask = 0;
  int best_size = 0;
  NodeCounter nodes;

  HitSearch(const PlaneMultigraph& g, long long cap) : nodes(cap) {
    n = g.vertex_count();
    const auto& faces = g.global_faces();
    face_mask.assign(faces.size(), 0);
    vertex_faces.assign(n, {});
    for (const GlobalFace& f : faces)
      for (VertexId v : f.boundary) {
        int i = g.vertex_index(v);
        face_mask[f.id] |= std::uint64_t{1} << i;
        vertex_faces[i].push_back(f.id);
      }
    max_hits = 1;
    for (int i = 0; i < n; ++i)
      max_hits = std::max(max_hits, static_cast<int>(vertex_faces[i].size()));
    hit_count.assign(faces.size(), 0);
    unhit = static_cast<int>(faces.size());
    // Greedy upper bound.
    std::vector<char> covered(faces.size(), 0);
    std::uint64_t chosen = 0;
    int remaining = unhit, size = 0;
    while (remaining > 0) {
      int pick = -1, gain = -1;
      for (int i = 0; i < n; ++i) {
        int covers = 0;
        for (int f : vertex_faces[i])
          if (!covered[f]) ++covers;
        if (covers > gain) {
          gain = covers;
          pick = i;
        }
      }
      chosen |= std::uint64_t{1} << pick;
      ++size;
      for (int f : vertex_faces[pick])
        if (!covered[f]) {
          covered[f] = 1;
          --remaining;
        }
    }
    best_mask = chosen;
    best_size = size;
    descend(0, 0);
  }

  void descend(std::uint64_t chosen_mask, int size) {
    nodes.tick();
    if (unhit == 0) {
      if (size < best_size) {
        best_size = size;
        best_mask = chosen_mask;
      }
      return;
    }
    int lower = (unhit + max_hits - 1) / max_hits;
    if (size + lower >= best_size) return;
    // First face not yet hit.
    int target = -1;
    for (std::size_t f = 0; f < hit_count.size(); ++f)
      if (hit_count[f] == 0) {
        target = static_cast<int>(f);
        break;
      }
    std::uint64_t candidates = face_mask[target];
    while (candidates) {
      int i = std::countr_zero(candidates);
      candidates &= candidates - 1;
      for (int f : vertex_faces[i])
        if (hit_count[f]++ == 0) --unhit;
      descend(chosen_mask | (std::uint64_t{1} << i), size + 1);
      for (int f : vertex_faces[i])
        if (--hit_count[f] == 0) ++unhit;
    }
  }
};

// --- maximum independent set --------------------------------------------------

struct MisSearch {
  int n;
  std::vector<std::uint64_t> adj;
  std::uint64_t best_mask = 0;
  int best_size = -1;
  NodeCounter nodes;

  MisSearch(const PlaneMultigraph& g, long long cap) : nodes(cap) {
    n = g.vertex_count();
    adj.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (VertexId u : g.neighbors(g.vertex_ids()[i]))
        adj[i] |= std::uint64_t{1} << g.vertex_index(u);
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    descend(0, 0, all);
  }

  void descend(std::uint64_t chosen_mask, int size, std::uint64_t open) {
    nodes.tick();
    if (size + std::popcount(open) <= best_size) return;
    if (!open) {
      if (size > best_size) {
        best_size = size;
        best_mask = chosen_mask;
      }
      return;
    }
    int i = std::countr_zero(open);
    std::uint64_t bit = std::uint64_t{1} << i;
    // Include i, dropping its neighbors.
    descend(chosen_mask | bit, size + 1, open & ~bit & ~adj[i]);
    // Exclude i.
    descend(chosen_mask, size, open & ~bit);
  }
};

// --- exhaustive 2-coloring ----------------------------------------------------

// Unified constraint view: the coloring is acceptable iff every listed
// vertex set sees both colors.  Closed neighborhoods encode domatic;
// qualifying face boundaries encode polychromatic.
std::vector<std::vector<int>> coloring_constraints(const PlaneMultigraph& g,
                                                   bool require_3plus_only) {
  std::set<std::vector<int>> dedup;
  for (VertexId v : g.vertex_ids()) {
    std::vector<int> c{g.vertex_index(v)};
    for (VertexId u : g.neighbors(v)) c.push_back(g.vertex_index(u));
    std::sort(c.begin(), c.end());
    dedup.insert(c);
  }
  for (const GlobalFace& f : g.global_faces()) {
    if (require_3plus_only && f.length < 3) continue;
    std::vector<int> c;
    for (VertexId v : f.boundary) c.push_back(g.vertex_index(v));
    std::sort(c.begin(), c.end());
    dedup.insert(c);
  }
  return {dedup.begin(), dedup.end()};
}

struct ColorSearch {
  int n;
  std::vector<std::vector<int>> constraints;
  std::vector<std::vector<int>> member_of;  // vertex -> constraint ids
  std::vector<int> a_count, b_count, open_count;
  std::vector<int> color;  // -1 unknown, 0 = A, 1 = B
  NodeCounter nodes;
  bool found = false;

  ColorSearch(const PlaneMultigraph& g, bool three_plus, long long cap) : nodes(cap) {
    n = g.vertex_count();
    constraints = coloring_constraints(g, three_plus);
    member_of.assign(n, {});
    for (std::size_t ci = 0; ci < constraints.size(); ++ci)
      for (int v : constraints[ci]) member_of[v].push_back(static_cast<int>(ci));
    a_count.assign(constraints.size(), 0);
    b_count.assign(constraints.size(), 0);
    open_count.resize(constraints.size());
    for (std::size_t ci = 0; ci < constraints.size(); ++ci)
      open_count[ci] = static_cast<int>(constraints[ci].size());
    color.assign(n, -1);
    found = (n == 0) ? true : assign(0, 0);
  }

  // Sets color[v]=c and propagates; returns false on contradiction.  The
  // trail records every vertex colored so the caller can undo.
  bool propagate(int v, int c, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> pending{{v, c}};
    while (!pending.empty()) {
      auto [x, cx] = pending.back();
      pending.pop_back();
      if (color[x] != -1) {
        if (color[x] != cx) return false;
        continue;
      }
      color[x] = cx;
      trail.push_back(x);
      for (int ci : member_of[x]) {
        (cx == 0 ? a_count[ci] : b_count[ci])++;
        --open_count[ci];
        if (a_count[ci] > 0 && b_count[ci] > 0) continue;
        if (open_count[ci] == 0) return false;  // monochromatic and full
        if (open_count[ci] == 1) {
          // The last open vertex must take the missing color.
          int missing = a_count[ci] == 0 ? 0 : 1;
          for (int y : constraints[ci])
            if (color[y] == -1) pending.push_back({y, missing});
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int x : trail) {
      int cx = color[x];
      for (int ci : member_of[x]) {
        (cx == 0 ? a_count[ci] : b_count[ci])--;
        ++open_count[ci];
      }
      color[x] = -1;
    }
    trail.clear();
  }

  bool assign(int v, int forced_first) {
    nodes.tick();
    while (v < n && color[v] != -1) ++v;
    if (v >= n) return true;
    const auto choices =
        (v == 0) ? std::vector<int>{forced_first} : std::vector<int>{0, 1};
    for (int c : choices) {
      std::vector<int> trail;
      if (propagate(v, c, trail) && assign(v + 1, 0)) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace

OracleResult min_dominating_exact(const PlaneMultigraph& g, const OracleBudget& budget) {
  check_budget(g, budget);
  if (g.vertex_count() == 0) return {};
  DomSearch s(g, budget.max_nodes);
  return {s.best_size, indices_to_ids(g, s.best_mask)};
}

OracleResult min_face_hitting_exact(const PlaneMultigraph& g, const OracleBudget& budget) {
  check_budget(g, budget);
  if (g.vertex_count() == 0) return {};
  HitSearch s(g, budget.max_nodes);
  return {s.best_size, indices_to_ids(g, s.best_mask)};
}

OracleResult max_independent_exact(const PlaneMultigraph& g, const OracleBudget& budget) {
  check_budget(g, budget);
  if (g.vertex_count() == 0) return {};
  MisSearch s(g, budget.max_nodes);
  return {s.best_size, indices_to_ids(g, s.best_mask)};
}

std::optional<TwoColoring> exists_dp_two_coloring(const PlaneMultigraph& g,
                                                  bool require_3plus_only,
                                                  const OracleBudget& budget) {
  check_budget(g, budget);
  ColorSearch s(g, require_3plus_only, budget.max_nodes);
  if (!s.found) return std::nullopt;
  TwoColoring c;
  for (int i = 0; i < g.vertex_count(); ++i)
    c.assignment[g.vertex_ids()[i]] = s.color[i] == 0 ? Color::A : Color::B;
  return c;
}

bool oracle_coloring_ok(const PlaneMultigraph& g, const TwoColoring& c,
                        bool require_3plus_only) {
  for (const auto& constraint : coloring_constraints(g, require_3plus_only)) {
    bool has_a = false, has_b = false;
    for (int i : constraint)
      (c.at(g.vertex_ids()[i]) == Color::A ? has_a : has_b) = true;
    if (!has_a || !has_b) return false;
  }
  return true;
}

}  // namespace facehit
