#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "facehit/errors.hpp"
#include "facehit/fourcolor.hpp"
#include "facehit/plg.hpp"
#include "facehit/rng.hpp"

using namespace facehit;

namespace {

int colors_used(const FourColoring& c) {
  std::set<int> seen;
  for (auto [v, col] : c.assignment) seen.insert(col);
  return static_cast<int>(seen.size());
}

bool three_colorable(const SimpleGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  std::map<VertexId, int> idx;
  for (int i = 0; i < n; ++i) idx[g.vertices[i]] = i;
  std::vector<int> c(n, 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool ok = true;
    for (auto [u, v] : g.edges)
      if (c[idx[u]] == c[idx[v]]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("to_simple collapses multiplicity and keeps vertices") {
  PlaneMultigraph lens = build_graph(parse_plg(R"(plg 1
v 0
v 1
e 0 0 1
e 1 0 1
rot 0 0+ 1+
rot 1 0- 1-
)").data);
  SimpleGraph s = to_simple(lens);
  CHECK(s.vertices == std::vector<VertexId>{0, 1});
  CHECK(s.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}});

  SimpleGraph k4 = to_simple(corpus_graph("k4"));
  CHECK(k4.edges.size() == 6);

  // 15 edges, three of them parallel duplicates.
  SimpleGraph dtn = to_simple(corpus_graph("doubled_triangle_nested"));
  CHECK(dtn.vertices.size() == 12);
  CHECK(dtn.edges.size() == 12);
}

TEST_CASE("to_simple rejects self-loops") {
  PlaneMultigraph loop = build_graph(parse_plg(R"(plg 1
v 0
e 0 0 0
rot 0 0+ 0-
)").data);
  try {
    to_simple(loop);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.assumption == "self-loop");
    CHECK(e.subject == 0);
  }
}

TEST_CASE("four_color: forced palettes") {
  FourColoring k4 = four_color(to_simple(corpus_graph("k4")));
  CHECK(colors_used(k4) == 4);
  CHECK(verify_proper(to_simple(corpus_graph("k4")), k4));

  // Even cycles are 2-chromatic and greedy reinsertion finds that.
  for (const char* name : {"c4", "c6"}) {
    CAPTURE(name);
    SimpleGraph s = to_simple(corpus_graph(name));
    FourColoring c = four_color(s);
    CHECK(verify_proper(s, c));
    CHECK(colors_used(c) == 2);
  }

  // An odd wheel needs all four colors.
  SimpleGraph w = to_simple(corpus_graph("wheel5"));
  FourColoring cw = four_color(w);
  CHECK(verify_proper(w, cw));
  CHECK(colors_used(cw) == 4);
}

TEST_CASE("four_color: proper on every corpus graph, colors in range") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    PlaneMultigraph g = corpus_graph(entry.name);
    if (g.first_self_loop().has_value()) continue;
    SimpleGraph s = to_simple(g);
    FourColoring c = four_color(s);
    CHECK(verify_proper(s, c));
    CHECK(c.assignment.size() == s.vertices.size());
    for (auto [v, col] : c.assignment) {
      CHECK(col >= 1);
      CHECK(col <= 4);
    }
  }
}

TEST_CASE("four_color: icosahedron needs exactly four colors") {
  SimpleGraph ico = to_simple(corpus_graph("icosahedron"));
  FourColoring c = four_color(ico);
  CHECK(verify_proper(ico, c));
  CHECK(colors_used(c) == 4);
  CHECK(!three_colorable(ico));
  // Sanity-check the exhaustive 3-coloring helper on a 3-chromatic graph.
  CHECK(three_colorable(to_simple(corpus_graph("octahedron"))));
}

TEST_CASE("four_color is deterministic") {
  SimpleGraph ico = to_simple(corpus_graph("icosahedron"));
  CHECK(four_color(ico).assignment == four_color(ico).assignment);
  SimpleGraph k4s = to_simple(corpus_graph("k4_subdivided"));
  CHECK(four_color(k4s).assignment == four_color(k4s).assignment);
}

TEST_CASE("verify_proper agrees with a direct edge scan") {
  SimpleGraph oct = to_simple(corpus_graph("octahedron"));
  SplitMix64 rng(0xC01Du);
  for (int trial = 0; trial < 300; ++trial) {
    FourColoring c;
    for (VertexId v : oct.vertices)
      c.assignment[v] = 1 + static_cast<int>(rng.below(4));
    bool expect = true;
    for (auto [u, v] : oct.edges)
      if (c.assignment[u] == c.assignment[v]) expect = false;
    CHECK(verify_proper(oct, c) == expect);
  }
}

TEST_CASE("verify_proper demands totality") {
  SimpleGraph tri = to_simple(corpus_graph("triangle"));
  FourColoring partial;
  partial.assignment[0] = 1;
  CHECK_THROWS_AS(verify_proper(tri, partial), BadParameterError);
}

TEST_CASE("four_color handles trivial graphs") {
  SimpleGraph empty;
  CHECK(four_color(empty).assignment.empty());
  SimpleGraph lone{{5}, {}};
  FourColoring c = four_color(lone);
  CHECK(c.at(5) == 1);
}
