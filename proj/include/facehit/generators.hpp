#pragma once

#include <cstdint>

#include "facehit/plane_graph.hpp"

namespace facehit {

enum class FamilyKind { edges, paths_3edge, cycles_4 };

// Simple plane triangulation grown by repeated apex insertion into a
// uniformly chosen face, then n diagonal-flip attempts (flips that would
// create a parallel edge or self-loop are skipped).  Deterministic per seed.
PlaneMultigraph stacked_triangulation(int n, std::uint64_t seed);

// k disjoint copies (side by side in the shared outer region) of an edge,
// a 3-edge path, or a 4-cycle: the families with domination number n/2.
PlaneMultigraph disjoint_family(FamilyKind kind, int k);

// k disjoint copies of K4 with every edge doubled into a 2-face lens: the
// family with face-hitting number 3n/4.
PlaneMultigraph doubled_k4_family(int k);

// One vertex carrying three self-loops, a pendant neighbor inside each
// former 1-face.  Every face has length >= 3, yet one face's boundary visits
// only the loop vertex, so no 2-coloring makes every face bichromatic.
PlaneMultigraph loop_gadget();

// Random multigraph meeting the two-class partition preconditions (no
// isolated vertices, self-loops, or 2-faces): a flipped stacked
// triangulation with pendant trees attached, a random edge subset deleted
// (rejecting deletions that isolate a vertex), and small components nested
// into random faces.  Deterministic per (n, seed); always n vertices.
PlaneMultigraph random_theorem_instance(int n, std::uint64_t seed);

}  // namespace facehit
