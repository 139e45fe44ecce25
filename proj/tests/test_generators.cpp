#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "facehit/errors.hpp"
#include "facehit/generators.hpp"
#include "facehit/oracle.hpp"
#include "facehit/plg.hpp"

using namespace facehit;

namespace {

std::string canonical(const PlaneMultigraph& g) { return write_plg(g.to_data()); }

bool all_faces_triangular(const PlaneMultigraph& g) {
  return std::all_of(g.global_faces().begin(), g.global_faces().end(),
                     [](const GlobalFace& f) { return f.length == 3; });
}

bool meets_partition_preconditions(const PlaneMultigraph& g) {
  return !g.first_isolated_vertex().has_value() &&
         !g.first_self_loop().has_value() &&
         !g.first_forbidden_two_face().has_value();
}

}  // namespace

TEST_CASE("stacked_triangulation: smallest cases are forced") {
  CHECK(canonical(stacked_triangulation(3, 123)) ==
        canonical(corpus_graph("triangle")));
  for (std::uint64_t seed : {0ull, 1ull, 2ull, 42ull, 999ull}) {
    CAPTURE(seed);
    PlaneMultigraph g = stacked_triangulation(4, seed);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(all_faces_triangular(g));
    CHECK(!g.first_parallel_edge().has_value());
  }
}

TEST_CASE("stacked_triangulation: n=50 is a simple triangulation") {
  PlaneMultigraph g = stacked_triangulation(50, 7);
  CHECK(g.vertex_count() == 50);
  CHECK(g.edge_count() == 3 * 50 - 6);
  CHECK(g.is_connected());
  CHECK(all_faces_triangular(g));
  CHECK(!g.first_parallel_edge().has_value());
  CHECK(!g.first_self_loop().has_value());
}

TEST_CASE("stacked_triangulation: deterministic, seed-sensitive, flips happen") {
  CHECK(canonical(stacked_triangulation(30, 7)) ==
        canonical(stacked_triangulation(30, 7)));
  CHECK(canonical(stacked_triangulation(30, 7)) !=
        canonical(stacked_triangulation(30, 8)));
  CHECK_THROWS_AS(stacked_triangulation(2, 0), BadParameterError);
}

TEST_CASE("disjoint_family: the n/2 domination families") {
  PlaneMultigraph e3 = disjoint_family(FamilyKind::edges, 3);
  CHECK(e3.vertex_count() == 6);
  CHECK(e3.component_count() == 3);
  CHECK(min_dominating_exact(e3).size == 3);

  PlaneMultigraph p2 = disjoint_family(FamilyKind::paths_3edge, 2);
  CHECK(p2.vertex_count() == 8);
  CHECK(p2.edges().size() == 6);
  CHECK(min_dominating_exact(p2).size == 4);

  PlaneMultigraph c2 = disjoint_family(FamilyKind::cycles_4, 2);
  CHECK(c2.vertex_count() == 8);
  CHECK(c2.component_count() == 2);
  CHECK(c2.global_faces().size() == 3);  // two bounded quads + shared outer
  CHECK(min_dominating_exact(c2).size == 4);

  for (FamilyKind kind :
       {FamilyKind::edges, FamilyKind::paths_3edge, FamilyKind::cycles_4}) {
    CHECK(meets_partition_preconditions(disjoint_family(kind, 2)));
    CHECK_THROWS_AS(disjoint_family(kind, 0), BadParameterError);
  }
}

TEST_CASE("doubled_k4_family: the 3n/4 face-hitting family") {
  PlaneMultigraph g1 = doubled_k4_family(1);
  CHECK(g1.vertex_count() == 4);
  CHECK(g1.edge_count() == 12);
  CHECK(g1.global_faces().size() == 10);  // 4 triangles + 6 lenses
  CHECK(g1.first_parallel_edge().has_value());
  CHECK(g1.first_forbidden_two_face().has_value());
  CHECK(min_face_hitting_exact(g1).size == 3);

  PlaneMultigraph g2 = doubled_k4_family(2);
  CHECK(g2.vertex_count() == 8);
  CHECK(g2.component_count() == 2);
  CHECK(g2.global_faces().size() == 19);  // outer triangles merge
  CHECK(min_face_hitting_exact(g2).size == 6);

  CHECK_THROWS_AS(doubled_k4_family(0), BadParameterError);
}

TEST_CASE("loop_gadget: all long faces, yet no bichromatic 2-coloring") {
  PlaneMultigraph g = loop_gadget();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.first_self_loop().has_value());
  for (const GlobalFace& f : g.global_faces()) CHECK(f.length >= 3);
  bool lonely_face = false;
  for (const GlobalFace& f : g.global_faces())
    if (f.length == 3 && f.boundary == std::vector<VertexId>{0}) lonely_face = true;
  CHECK(lonely_face);
  CHECK(!exists_dp_two_coloring(g, false).has_value());
  CHECK(!exists_dp_two_coloring(g, true).has_value());
}

TEST_CASE("random_theorem_instance: trivial sizes and determinism") {
  CHECK(canonical(random_theorem_instance(2, 5)) ==
        canonical(corpus_graph("single_edge")));
  CHECK(write_plg(random_theorem_instance(30, 17).to_data()) ==
        write_plg(random_theorem_instance(30, 17).to_data()));
  CHECK_THROWS_AS(random_theorem_instance(1, 0), BadParameterError);
}

TEST_CASE("random_theorem_instance: sweep meets the partition preconditions") {
  int disconnected = 0;
  int with_pendant = 0;
  for (int n : {3, 5, 8, 10, 14, 19, 25, 33, 40}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      CAPTURE(n);
      CAPTURE(seed);
      PlaneMultigraph g = random_theorem_instance(n, seed);
      CHECK(g.vertex_count() == n);
      CHECK(meets_partition_preconditions(g));
      if (g.component_count() > 1) ++disconnected;
      for (VertexId v : g.vertex_ids())
        if (g.degree(v) == 1) ++with_pendant;
    }
  }
  // The sweep must actually exercise nesting/disconnection and pendants.
  CHECK(disconnected > 0);
  CHECK(with_pendant > 0);
}
