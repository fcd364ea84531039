#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/linear_system.hpp"
#include "mcpp/multilinear.hpp"

namespace mcpp {

// The join-tree H-representation over the closed family: per-block choice
// equalities, per-edge production-balance equalities, intersection-matching
// equalities along tree edges sharing more than one block, and nonnegativity.
// For an alpha-acyclic hypergraph this system describes the hull of the 0-1
// profiles exactly.
RelaxationSystem jointree_relaxation(const MonomialFamily& fam, const JoinTree& t);
// Convenience overload using the deterministic join tree.
RelaxationSystem jointree_relaxation(const MonomialFamily& fam);

// The variant with intersection-matching rows for every unordered edge pair
// instead of tree edges only. Defined for every hypergraph.
RelaxationSystem pairwise_relaxation(const MonomialFamily& fam);

enum class AffineHullForm {
  transversal,  // one defining equality per monomial touching the transversal
  symmetric,    // choice rows plus group-consistency rows, transversal-free
};

// Equality-only system describing the affine hull of the profile polytope.
// Requires a downward-closed hypergraph; the transversal form additionally
// needs a transversal d (ignored by the symmetric form).
RelaxationSystem affine_hull_system(const MonomialFamily& fam, const Mono& d, AffineHullForm form);

// True iff two consistent equality systems over the same coordinates define
// the same affine subspace (mutual rank containment on augmented matrices).
bool same_affine_subspace(const LinearSystem& a, const LinearSystem& b);

// Verifies that the pairwise system cuts nothing beyond the join-tree
// system: every pairwise equality absent from the tree system has LP-min =
// LP-max = 0 over the tree system.
bool check_pairwise_equals_jointree(const MonomialFamily& fam, const JoinTree& t);

}  // namespace mcpp
