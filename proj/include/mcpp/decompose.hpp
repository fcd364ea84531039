#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/linear_system.hpp"
#include "mcpp/vertex_enum.hpp"

#include <optional>
#include <string>

namespace mcpp {

// A cover of the hypergraph by two subhypergraphs.
struct Decomposition {
  Hypergraph h1, h2;
};

// Sorted block ids shared by the two parts.
Mono shared_blocks(const Decomposition& d);

// True iff the shared vertex set is empty, a single block, or an edge of
// both parts — the sufficient condition for the profile polytope to split
// into the two projected polytopes. Throws when the parts do not cover h.
bool check_decomposition_precondition(const Decomposition& d, const Hypergraph& h);

// The concatenation of the two parts' join-tree systems, embedded in the
// full coordinate space. Exact H-representation of the intersection of the
// two projected polytopes; requires both parts alpha-acyclic.
LinearSystem intersection_system(const Decomposition& d, const MonomialFamily& fam);

struct DecompositionCheck {
  bool ok = false;
  std::optional<std::vector<Rat>> counterexample;
  std::string detail;
};

// Verifies that the intersection of the projected polytopes equals the hull
// of the profiles. Uses the exact H-representation route when both parts are
// alpha-acyclic; otherwise falls back to membership cross-checks plus seeded
// random-objective LP comparisons over an exact extended formulation.
DecompositionCheck verify_decomposition(const Decomposition& d, const MonomialFamily& fam,
                                        int coordinate_guard = kDefaultCoordinateGuard,
                                        unsigned seed = 1, int samples = 20);

}  // namespace mcpp
