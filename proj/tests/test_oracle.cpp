#include <doctest.h>

#include "corpus.hpp"
#include "facehit/oracle.hpp"
#include "facehit/plg.hpp"
#include "facehit/rng.hpp"
#include "facehit/verify.hpp"

using namespace facehit;

namespace {

PlaneMultigraph disjoint_edges(int k) {
  GraphData data;
  for (int i = 0; i < k; ++i) {
    data.vertices.push_back(2 * i);
    data.vertices.push_back(2 * i + 1);
    data.edges.push_back({i, 2 * i, 2 * i + 1});
    data.rotations[2 * i] = {{i, true}};
    data.rotations[2 * i + 1] = {{i, false}};
  }
  return build_graph(data);
}

}  // namespace

TEST_CASE("min dominating set: small exact values") {
  CHECK(min_dominating_exact(corpus_graph("k4")).size == 1);
  CHECK(min_dominating_exact(corpus_graph("triangle")).size == 1);
  CHECK(min_dominating_exact(corpus_graph("path2")).size == 1);
  CHECK(min_dominating_exact(corpus_graph("c4")).size == 2);
  CHECK(min_dominating_exact(corpus_graph("c6")).size == 2);
  CHECK(min_dominating_exact(corpus_graph("star4")).size == 1);
  CHECK(min_dominating_exact(corpus_graph("wheel5")).size == 1);
  CHECK(min_dominating_exact(corpus_graph("octahedron")).size == 2);
  // Two antipodal vertices have disjoint closed neighborhoods covering all 12.
  CHECK(min_dominating_exact(corpus_graph("icosahedron")).size == 2);
  CHECK(min_dominating_exact(corpus_graph("k4_subdivided")).size == 2);
  for (int k : {1, 2, 3, 4}) {
    CAPTURE(k);
    CHECK(min_dominating_exact(disjoint_edges(k)).size == k);
  }
}

TEST_CASE("min dominating set: witness is dominating and minimal") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    PlaneMultigraph g = corpus_graph(entry.name);
    OracleResult r = min_dominating_exact(g);
    CHECK(static_cast<int>(r.witness.size()) == r.size);
    CHECK(is_dominating(g, r.witness));
  }
}

TEST_CASE("min face hitting set: small exact values") {
  CHECK(min_face_hitting_exact(corpus_graph("triangle")).size == 1);
  CHECK(min_face_hitting_exact(corpus_graph("k4")).size == 2);
  CHECK(min_face_hitting_exact(corpus_graph("c4")).size == 1);
  CHECK(min_face_hitting_exact(corpus_graph("nested_triangles")).size == 2);
  CHECK(min_face_hitting_exact(corpus_graph("single_edge")).size == 1);
  // A lens: both 2-faces touch both vertices.
  PlaneMultigraph lens = build_graph(parse_plg(R"(plg 1
v 0
v 1
e 0 0 1
e 1 0 1
rot 0 0+ 1+
rot 1 0- 1-
)").data);
  CHECK(min_face_hitting_exact(lens).size == 1);
}

TEST_CASE("min face hitting set: witness hits and is minimal") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    PlaneMultigraph g = corpus_graph(entry.name);
    OracleResult r = min_face_hitting_exact(g);
    CHECK(static_cast<int>(r.witness.size()) == r.size);
    CHECK(is_face_hitting(g, r.witness));
  }
}

TEST_CASE("max independent set: exact values") {
  CHECK(max_independent_exact(corpus_graph("k4")).size == 1);
  CHECK(max_independent_exact(corpus_graph("c4")).size == 2);
  CHECK(max_independent_exact(corpus_graph("c6")).size == 3);
  CHECK(max_independent_exact(corpus_graph("octahedron")).size == 2);
  CHECK(max_independent_exact(corpus_graph("icosahedron")).size == 3);
  CHECK(max_independent_exact(corpus_graph("k4_subdivided")).size == 4);
  CHECK(max_independent_exact(corpus_graph("star4")).size == 4);
  OracleResult r = max_independent_exact(corpus_graph("k4_subdivided"));
  CHECK(r.witness == std::vector<VertexId>{4, 5, 6, 7});
}

TEST_CASE("exhaustive 2-coloring: found colorings pass both auditors") {
  for (const CorpusEntry& entry : corpus()) {
    if (!entry.theorem_input) continue;
    CAPTURE(entry.name);
    PlaneMultigraph g = corpus_graph(entry.name);
    auto c = exists_dp_two_coloring(g, false);
    REQUIRE(c.has_value());
    ColoringAudit audit = audit_two_coloring(g, *c);
    CHECK(audit.domatic);
    CHECK(audit.polychromatic);
    CHECK(oracle_coloring_ok(g, *c, false));
  }
}

TEST_CASE("exhaustive 2-coloring: impossible instances return nothing") {
  // An isolated vertex can never be dominated by the other class.
  PlaneMultigraph iso = build_graph(parse_plg(R"(plg 1
v 0
v 1
v 2
e 0 1 2
rot 1 0+
rot 2 0-
)").data);
  CHECK(!exists_dp_two_coloring(iso, false).has_value());

  // A triangle's faces are fine, but a single vertex has no neighbor at all.
  PlaneMultigraph lone = build_graph(parse_plg("plg 1\nv 7\n").data);
  CHECK(!exists_dp_two_coloring(lone, false).has_value());
}

TEST_CASE("exhaustive 2-coloring: 3plus flag relaxes only short faces") {
  // Doubled edge: full polychromatic needs both lens faces bichromatic;
  // possible with {0}/{1}.  All-A fails everything.  With only vertex
  // constraints binding under 3plus, the {0}/{1} coloring still wins.
  PlaneMultigraph lens = build_graph(parse_plg(R"(plg 1
v 0
v 1
e 0 0 1
e 1 0 1
rot 0 0+ 1+
rot 1 0- 1-
)").data);
  auto full = exists_dp_two_coloring(lens, false);
  REQUIRE(full.has_value());
  CHECK(audit_two_coloring(lens, *full).polychromatic);
  auto relaxed = exists_dp_two_coloring(lens, true);
  REQUIRE(relaxed.has_value());
  CHECK(audit_two_coloring(lens, *relaxed).polychromatic_3plus);
}

TEST_CASE("oracle and verify agree on random colorings") {
  SplitMix64 rng(0xFACEu);
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    PlaneMultigraph g = corpus_graph(entry.name);
    for (int trial = 0; trial < 200; ++trial) {
      TwoColoring c;
      for (VertexId v : g.vertex_ids())
        c.assignment[v] = rng.below(2) ? Color::A : Color::B;
      ColoringAudit audit = audit_two_coloring(g, c);
      CHECK(oracle_coloring_ok(g, c, false) == (audit.domatic && audit.polychromatic));
      CHECK(oracle_coloring_ok(g, c, true) ==
            (audit.domatic && audit.polychromatic_3plus));
    }
  }
}

TEST_CASE("budgets are enforced") {
  PlaneMultigraph ico = corpus_graph("icosahedron");
  OracleBudget tiny_vertices{10, 1000000};
  CHECK_THROWS_AS(min_dominating_exact(ico, tiny_vertices), BudgetExceededError);
  CHECK_THROWS_AS(max_independent_exact(ico, tiny_vertices), BudgetExceededError);
  CHECK_THROWS_AS(exists_dp_two_coloring(ico, false, tiny_vertices),
                  BudgetExceededError);
  OracleBudget tiny_nodes{20, 3};
  CHECK_THROWS_AS(max_independent_exact(ico, tiny_nodes), BudgetExceededError);
}

TEST_CASE("oracle sizes are additive over disjoint components") {
  PlaneMultigraph nested = corpus_graph("nested_triangles");
  CHECK(min_dominating_exact(nested).size == 2);
  PlaneMultigraph edges3 = disjoint_edges(3);
  CHECK(min_dominating_exact(edges3).size == 3);
  CHECK(min_face_hitting_exact(edges3).size == 1);  // single shared face
  CHECK(max_independent_exact(edges3).size == 3);
}
