#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/multilinear.hpp"
#include "mcpp/polytope.hpp"

#include <string>
#include <vector>

namespace mcpp {

// An inequality c.z <= delta over the block-variable space L(V) u E.
struct BlockInequality {
  RVector c;
  Rat delta;
};

// One nonempty proper subset per block, driving the block-to-choices
// substitution z_I -> sum of the selected w_i.
struct Selection {
  std::vector<Mono> chosen;  // indexed by block id

  bool valid_for(const Partition& p) const;
};

// All valid selections in canonical order (blocks in order, subsets by the
// global label order).
std::vector<Selection> enumerate_selections(const Partition& p);

// Blocks whose fixing to 0 (resp. 1) forces tightness of the inequality on
// every block-space vertex. Computed by exhaustive scan.
struct ForcingBlocks {
  std::vector<int> zero_forcing;  // sorted block ids
  std::vector<int> one_forcing;
  bool degenerate = false;  // some block appears in both classes
};

ForcingBlocks classify_forcing_blocks(const BlockInequality& ineq, const PointSet& block_vertices);

// The lifted inequality a.w <= delta: substitute each block variable by the
// sum of its selected choices and linearize. Nonzero coefficients satisfy
// a_J = c_{E(J)} and J within the union of the selections.
struct LiftedInequality {
  RVector a;
  Rat delta;
};

LiftedInequality lift_inequality(const BlockInequality& ineq, const Selection& sel,
                                 const MonomialFamily& fam);

// The facet-preservation test: singleton selections on zero-forcing blocks
// and co-singleton selections on one-forcing blocks.
bool check_selection_condition(const Selection& sel, const ForcingBlocks& cls, const Partition& p);

// Flips one block variable (z -> 1-z) and rewrites the inequality through
// the linearization; an involution on block-space inequalities. Requires a
// downward-closed hypergraph so all rewritten monomials stay in the family.
BlockInequality flip_block(const BlockInequality& ineq, int block, const MonomialFamily& fam);

// Projection onto the reduced coordinates (drop everything touching the
// transversal) and its exact linear inverse for downward-closed hypergraphs.
std::vector<Rat> reduce_point(const std::vector<Rat>& w, const MonomialFamily& fam, const Mono& d);
std::vector<Rat> expand_point(const std::vector<Rat>& v, const MonomialFamily& fam, const Mono& d);

// Sweeps every selection, comparing the condition verdict against an
// independent rank-based facet certification of the lifted inequality on the
// enumerated profile vertices. The inequality must itself be facet-inducing
// for the block-space polytope.
struct LiftSweepEntry {
  Selection selection;
  bool condition = false;
  bool certified_facet = false;
};

struct LiftSweepReport {
  std::vector<LiftSweepEntry> entries;
  size_t disagreements = 0;
};

LiftSweepReport sweep_lift_selections(const BlockInequality& ineq, const MonomialFamily& fam,
                                    const PointSet& block_vertices, const PointSet& profile_vertices);

// Candidate block-space inequalities from the standard linearization of each
// edge (plus box bounds on the blocks). Candidates only: callers certify
// against the enumerated block-space vertices before relying on facetness.
std::vector<BlockInequality> block_inequality_catalog(const MonomialFamily& fam);

// The odd-hole style inequality along a block cycle I_1 I_2 ... I_m I_1:
// -z_{I_1 I_m} + sum of consecutive pair variables - inner block variables.
BlockInequality cycle_inequality(const MonomialFamily& fam, const std::vector<int>& cycle);

// Full-rank projection property of a facet's zero-fixed face: given the
// tight vertices of a certified facet and a nonempty U avoiding the
// one-forcing blocks, the face with z=0 on U projects onto the compatible
// label set with full affine rank. Returns false when that rank drops;
// throws when U is empty or meets the one-forcing blocks. A trivially-true
// outcome (empty compatible set) is reported via `applicable = false`.
struct ProjectionCheck {
  bool applicable = false;
  bool full_rank = false;
  size_t expected_dim = 0;
};

ProjectionCheck check_face_projection(const IneqCertificate& facet_cert, const ForcingBlocks& cls,
                                      const std::vector<int>& u, const MonomialFamily& fam);

}  // namespace mcpp
