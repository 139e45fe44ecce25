#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "facehit/domatic.hpp"
#include "facehit/errors.hpp"
#include "facehit/generators.hpp"
#include "facehit/plg.hpp"
#include "facehit/verify.hpp"

using namespace facehit;

namespace {

// Two disjoint 2-cycles, one nested in a lens of the other, with a pendant
// vertex inside each remaining lens so every global face has length >= 3.
const char* kNestedTwoCycles = R"(plg 1
v 0
v 1
v 2
v 3
v 4
v 5
e 0 0 1
e 1 0 1
e 2 2 3
e 3 2 3
e 4 0 4
e 5 2 5
rot 0 0+ 1+ 4+
rot 1 0- 1-
rot 2 2+ 3+ 5+
rot 3 2- 3-
rot 4 4-
rot 5 5-
anchor 0 root
anchor 1 in 0 1
outer 1 1
)";

// Two doubled triangles, the second nested inside a lens of the first with
// its own lens as outer walk, plus pendants killing the other lens 2-faces.
// Both cores keep the same deterministic class pattern, so the middle face
// (first core's {0,2} lens plus second core's {3,5} lens) starts
// monochromatic and only a component flip can repair it.
const char* kNestedDoubledTriangles = R"(plg 1
v 0
v 1
v 2
v 3
v 4
v 5
v 6
v 7
v 8
v 9
e 0 0 1
e 1 0 1
e 2 1 2
e 3 1 2
e 4 0 2
e 5 0 2
e 6 0 6
e 7 1 7
e 8 3 4
e 9 3 4
e 10 4 5
e 11 4 5
e 12 3 5
e 13 3 5
e 14 3 8
e 15 4 9
rot 0 1+ 6+ 0+ 5+ 4+
rot 1 0- 1- 3+ 7+ 2+
rot 2 2- 3- 4- 5-
rot 3 9+ 14+ 8+ 13+ 12+
rot 4 8- 9- 11+ 15+ 10+
rot 5 10- 11- 12- 13-
rot 6 6-
rot 7 7-
rot 8 14-
rot 9 15-
anchor 0 root
anchor 1 in 0 4
outer 0 1
outer 1 4
)";

// Triangle with a 2-edge pendant path hanging off vertex 0.
const char* kTrianglePendantPath = R"(plg 1
v 0
v 1
v 2
v 3
v 4
e 0 0 1
e 1 1 2
e 2 0 2
e 3 0 3
e 4 3 4
rot 0 0+ 3+ 2+
rot 1 1+ 0-
rot 2 2- 1-
rot 3 3- 4+
rot 4 4-
)";

PlaneMultigraph from_plg(const char* text) {
  return build_graph(parse_plg(text).data);
}

std::map<VertexId, Color> colors_of(const TwoColoring& c) { return c.assignment; }

bool audits_clean(const PlaneMultigraph& g, const TwoColoring& c) {
  ColoringAudit a = audit_two_coloring(g, c);
  return a.domatic && a.polychromatic;
}

std::vector<VertexId> sorted_ids(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("trim peels pendant vertices smallest id first") {
  auto [core, rec] = trim(corpus_graph("star4"));
  REQUIRE(rec.steps.size() == 4);
  CHECK(rec.steps[0].pendant == 1);
  CHECK(rec.steps[0].parent == 0);
  CHECK(rec.steps[0].removed_edges == std::vector<EdgeId>{0});
  CHECK(rec.steps[1].pendant == 2);
  CHECK(rec.steps[1].removed_edges == std::vector<EdgeId>{1});
  CHECK(rec.steps[2].pendant == 3);
  CHECK(rec.steps[2].removed_edges == std::vector<EdgeId>{2});
  // Once the leaves are gone the hub itself has one neighbor left.
  CHECK(rec.steps[3].pendant == 0);
  CHECK(rec.steps[3].parent == 4);
  CHECK(rec.steps[3].removed_edges == std::vector<EdgeId>{3});
  CHECK(core.vertex_ids() == std::vector<VertexId>{4});
  CHECK(core.edge_count() == 0);
}

TEST_CASE("trim leaves graphs of min degree two untouched") {
  PlaneMultigraph g = corpus_graph("c4");
  auto [core, rec] = trim(g);
  CHECK(rec.steps.empty());
  CHECK(write_plg(core.to_data()) == write_plg(g.to_data()));
}

TEST_CASE("trim stops at the first two-connected core") {
  auto [core, rec] = trim(from_plg(kTrianglePendantPath));
  REQUIRE(rec.steps.size() == 2);
  CHECK(rec.steps[0].pendant == 4);
  CHECK(rec.steps[0].parent == 3);
  CHECK(rec.steps[0].removed_edges == std::vector<EdgeId>{4});
  CHECK(rec.steps[1].pendant == 3);
  CHECK(rec.steps[1].parent == 0);
  CHECK(rec.steps[1].removed_edges == std::vector<EdgeId>{3});
  CHECK(core.vertex_ids() == std::vector<VertexId>{0, 1, 2});
  std::vector<EdgeId> kept;
  for (const Edge& e : core.edges()) kept.push_back(e.id);
  CHECK(kept == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("trim collapses 2-cycles because parallel edges share one neighbor") {
  auto [core, rec] = trim(from_plg(kNestedTwoCycles));
  REQUIRE(rec.steps.size() == 4);
  CHECK(rec.steps[0].pendant == 1);
  CHECK(rec.steps[0].parent == 0);
  CHECK(rec.steps[0].removed_edges == std::vector<EdgeId>{0, 1});
  CHECK(rec.steps[1].pendant == 0);
  CHECK(rec.steps[1].parent == 4);
  CHECK(rec.steps[1].removed_edges == std::vector<EdgeId>{4});
  CHECK(rec.steps[2].pendant == 3);
  CHECK(rec.steps[2].parent == 2);
  CHECK(rec.steps[2].removed_edges == std::vector<EdgeId>{2, 3});
  CHECK(rec.steps[3].pendant == 2);
  CHECK(rec.steps[3].parent == 5);
  CHECK(rec.steps[3].removed_edges == std::vector<EdgeId>{5});
  CHECK(core.vertex_ids() == std::vector<VertexId>{4, 5});
  CHECK(core.component_count() == 2);
}

TEST_CASE("trim removes each edge exactly once and keeps components") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    PlaneMultigraph g = random_theorem_instance(40, seed);
    auto [core, rec] = trim(g);
    CHECK(core.component_count() == g.component_count());
    std::set<EdgeId> seen;
    for (const TrimStep& s : rec.steps)
      for (EdgeId e : s.removed_edges) CHECK(seen.insert(e).second);
    for (const Edge& e : core.edges()) CHECK(seen.insert(e.id).second);
    CHECK(static_cast<int>(seen.size()) == g.edge_count());
    for (VertexId v : core.vertex_ids()) CHECK(core.degree(v) != 1);
  }
}

TEST_CASE("component plans split isolated cores from two-connected ones") {
  auto star_plan = plan_components(trim(corpus_graph("star4")).first);
  REQUIRE(star_plan.size() == 1);
  CHECK(star_plan[0].kind == CoreComponentKind::trivial_isolated);
  CHECK(star_plan[0].source == ColoringSource::arbitrary);

  auto c4_plan = plan_components(corpus_graph("c4"));
  REQUIRE(c4_plan.size() == 1);
  CHECK(c4_plan[0].kind == CoreComponentKind::nontrivial);
  CHECK(c4_plan[0].source == ColoringSource::lemma);

  auto lens_plan =
      plan_components(trim(from_plg(kNestedTwoCycles)).first);
  REQUIRE(lens_plan.size() == 2);
  CHECK(lens_plan[0].kind == CoreComponentKind::trivial_isolated);
  CHECK(lens_plan[1].kind == CoreComponentKind::trivial_isolated);

  auto mixed_plan =
      plan_components(trim(from_plg(kNestedDoubledTriangles)).first);
  REQUIRE(mixed_plan.size() == 2);
  CHECK(mixed_plan[0].kind == CoreComponentKind::nontrivial);
  CHECK(mixed_plan[1].kind == CoreComponentKind::nontrivial);

  auto edges_plan =
      plan_components(trim(disjoint_family(FamilyKind::edges, 3)).first);
  REQUIRE(edges_plan.size() == 3);
  for (const ComponentPlanEntry& e : edges_plan)
    CHECK(e.kind == CoreComponentKind::trivial_isolated);
}

TEST_CASE("two-class merge dominates and hits all big faces") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.lemma_input) continue;
    CAPTURE(e.name);
    PlaneMultigraph g = corpus_graph(e.name);
    TwoColoring psi = lemma_coloring(g);
    ColoringAudit a = audit_two_coloring(g, psi);
    CHECK(a.domatic);
    CHECK(a.polychromatic_3plus);
    CHECK(!psi.class_of(Color::A).empty());
    CHECK(!psi.class_of(Color::B).empty());
  }
}

TEST_CASE("two-class merge on a triangle") {
  TwoColoring psi = lemma_coloring(corpus_graph("triangle"));
  CHECK(colors_of(psi) ==
        std::map<VertexId, Color>{{0, Color::A}, {1, Color::B}, {2, Color::A}});
}

TEST_CASE("two-class merge is deterministic") {
  PlaneMultigraph g = corpus_graph("wheel5");
  CHECK(colors_of(lemma_coloring(g)) == colors_of(lemma_coloring(g)));
}

TEST_CASE("two-class merge on a grown triangulation is fully polychromatic") {
  PlaneMultigraph g = stacked_triangulation(50, 1);
  TwoColoring psi = lemma_coloring(g);
  ColoringAudit a = audit_two_coloring(g, psi);
  CHECK(a.domatic);
  CHECK(a.polychromatic);  // every face is a triangle
  CHECK(a.violations.empty());
}

TEST_CASE("two-class merge rejects ineligible inputs") {
  CHECK_THROWS_WITH_AS(lemma_coloring(corpus_graph("nested_triangles")),
                       doctest::Contains("connected"), PreconditionError);
  CHECK_THROWS_WITH_AS(lemma_coloring(loop_gadget()),
                       doctest::Contains("self-loop"), PreconditionError);
  CHECK_THROWS_WITH_AS(lemma_coloring(corpus_graph("path2")),
                       doctest::Contains("degree"), PreconditionError);
}

TEST_CASE("partition coloring names the violated precondition") {
  PlaneMultigraph lone = build_graph(parse_plg("plg 1\nv 7\n").data);
  try {
    theorem_coloring(lone);
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(e.assumption == "isolated-vertex");
    CHECK(e.subject == 7);
  }

  PlaneMultigraph loops = loop_gadget();
  try {
    theorem_coloring(loops);
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(e.assumption == "self-loop");
    CHECK(e.subject == *loops.first_self_loop());
  }

  PlaneMultigraph lenses = doubled_k4_family(1);
  try {
    theorem_coloring(lenses);
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(e.assumption == "2-face");
    CHECK(e.subject == *lenses.first_forbidden_two_face());
  }
}

TEST_CASE("partition coloring equals the merge on untrimmable inputs") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.lemma_input) continue;
    CAPTURE(e.name);
    PlaneMultigraph g = corpus_graph(e.name);
    CHECK(colors_of(theorem_coloring(g)) == colors_of(lemma_coloring(g)));
  }
}

TEST_CASE("partition coloring accepts every corpus instance") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.theorem_input) continue;
    CAPTURE(e.name);
    PlaneMultigraph g = corpus_graph(e.name);
    CHECK(audits_clean(g, theorem_coloring(g)));
  }
}

TEST_CASE("partition coloring on nested 2-cycles with pendants") {
  PlaneMultigraph g = from_plg(kNestedTwoCycles);
  TwoColoring psi = theorem_coloring(g);
  CHECK(colors_of(psi) == std::map<VertexId, Color>{{0, Color::B},
                                                    {1, Color::A},
                                                    {2, Color::B},
                                                    {3, Color::A},
                                                    {4, Color::A},
                                                    {5, Color::A}});
  CHECK(audits_clean(g, psi));
}

TEST_CASE("partition coloring flips a nested component to fix a lens face") {
  PlaneMultigraph g = from_plg(kNestedDoubledTriangles);
  TwoColoring psi = theorem_coloring(g);
  // Both cores color their smallest vertex A in isolation; the nested one
  // comes out inverted, which only the flip repair produces.
  CHECK(colors_of(psi) == std::map<VertexId, Color>{{0, Color::A},
                                                    {1, Color::B},
                                                    {2, Color::A},
                                                    {3, Color::B},
                                                    {4, Color::A},
                                                    {5, Color::B},
                                                    {6, Color::B},
                                                    {7, Color::A},
                                                    {8, Color::A},
                                                    {9, Color::B}});
  CHECK(audits_clean(g, psi));
}

TEST_CASE("partition coloring survives deleting a matching from a triangulation") {
  PlaneMultigraph g = stacked_triangulation(20, 3);
  std::vector<EdgeId> matching;
  std::set<VertexId> used;
  for (const Edge& e : g.edges())
    if (!used.count(e.u) && !used.count(e.v)) {
      matching.push_back(e.id);
      used.insert(e.u);
      used.insert(e.v);
    }
  CHECK(matching.size() >= 9);
  PlaneMultigraph thinned = g.delete_edges(matching);
  REQUIRE(!thinned.first_isolated_vertex());
  REQUIRE(!thinned.first_forbidden_two_face());
  CHECK(audits_clean(thinned, theorem_coloring(thinned)));
}

TEST_CASE("partition coloring accepts random eligible instances") {
  for (int n : {6, 10, 17, 24, 33})
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      CAPTURE(n);
      CAPTURE(seed);
      PlaneMultigraph g = random_theorem_instance(n, seed);
      CHECK(audits_clean(g, theorem_coloring(g)));
    }
}

TEST_CASE("both partition classes dominate and hit every face") {
  PlaneMultigraph g = corpus_graph("single_edge");
  auto [v1, v2] = theorem_partition(g);
  CHECK(v1 == std::vector<VertexId>{1});
  CHECK(v2 == std::vector<VertexId>{0});

  PlaneMultigraph c4 = corpus_graph("c4");
  auto [a, b] = theorem_partition(c4);
  CHECK(a.size() == 2);
  CHECK(b.size() == 2);
  for (const std::vector<VertexId>& side : {a, b}) {
    CHECK(is_dominating(c4, side));
    CHECK(is_face_hitting(c4, side));
  }
}

TEST_CASE("partition classes are disjoint and cover the graph") {
  for (int n : {8, 15, 26})
    for (std::uint64_t seed : {4ULL, 5ULL}) {
      CAPTURE(n);
      CAPTURE(seed);
      PlaneMultigraph g = random_theorem_instance(n, seed);
      auto [v1, v2] = theorem_partition(g);
      std::vector<VertexId> all = v1;
      all.insert(all.end(), v2.begin(), v2.end());
      CHECK(sorted_ids(all) == g.vertex_ids());
      CHECK(static_cast<int>(std::min(v1.size(), v2.size())) <=
            g.vertex_count() / 2);
      for (const std::vector<VertexId>& side : {v1, v2}) {
        CHECK(is_dominating(g, side));
        CHECK(is_face_hitting(g, side));
      }
    }
}

TEST_CASE("half the vertices dominate the tight families") {
  auto [e1, e2] = theorem_partition(disjoint_family(FamilyKind::edges, 5));
  CHECK(e1 == std::vector<VertexId>{1, 3, 5, 7, 9});
  CHECK(e2 == std::vector<VertexId>{0, 2, 4, 6, 8});

  auto [p1, p2] =
      theorem_partition(disjoint_family(FamilyKind::paths_3edge, 2));
  CHECK(p1 == std::vector<VertexId>{1, 3, 5, 7});
  CHECK(p2 == std::vector<VertexId>{0, 2, 4, 6});

  auto [c1, c2] = theorem_partition(disjoint_family(FamilyKind::cycles_4, 2));
  CHECK(c1.size() == 4);
  CHECK(c2.size() == 4);
}
