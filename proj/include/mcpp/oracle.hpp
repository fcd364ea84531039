#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/linalg.hpp"

namespace mcpp {

inline constexpr size_t kDefaultEnumerationGuard = 4096;

// One feasible 0-1 assignment: exactly one variable per block equals 1.
struct ChoicePoint {
  std::vector<int> x;  // x[i-1] is the value of variable i

  bool operator==(const ChoicePoint& o) const { return x == o.x; }
  bool operator<(const ChoicePoint& o) const { return x < o.x; }
};

// All feasible assignments, lexicographically ordered. Size is the product
// of the block sizes; refuses loudly past the guard.
std::vector<ChoicePoint> enumerate_choices(const Partition& p,
                                           size_t guard = kDefaultEnumerationGuard);

// The linearized image of x: one coordinate per family monomial J, valued
// at the product of the chosen variables.
std::vector<Rat> profile_of(const ChoicePoint& x, const MonomialFamily& fam);

// The 0-1 profile set over the closed family (the set whose convex hull the
// relaxations approximate). Canonically ordered.
PointSet enumerate_profiles(const MonomialFamily& fam, size_t guard = kDefaultEnumerationGuard);

// Vertices of the unconstrained block-variable polytope over L(V) u E:
// all 0-1 block assignments with each edge coordinate the product of its
// block coordinates. 2^|V| points.
PointSet enumerate_multilinear_vertices(const MonomialFamily& fam,
                                        size_t guard = kDefaultEnumerationGuard);

// A transversal picks one distinguished variable per block.
bool is_transversal(const Mono& d, const Partition& p);
// The canonical transversal: the largest variable of each block.
Mono default_transversal(const Partition& p);

// Coordinates of the reduced space: family monomials avoiding the
// transversal entirely.
CoordsPtr reduced_coords(const MonomialFamily& fam, const Mono& d);

// Projections of the profiles onto the reduced space. For downward-closed
// hypergraphs the projection is a bijection, so these are exactly the
// vertices of the reduced polytope.
PointSet enumerate_reduced_profiles(const MonomialFamily& fam, const Mono& d,
                                    size_t guard = kDefaultEnumerationGuard);

struct BruteResult {
  Rat value;
  ChoicePoint argmax;  // lexicographically first among maximizers
};

// Exact maximum of the objective over all feasible assignments.
BruteResult brute_force_optimum(const Instance& inst, size_t guard = kDefaultEnumerationGuard);

}  // namespace mcpp
