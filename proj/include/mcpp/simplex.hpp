#pragma once

#include "mcpp/linear_system.hpp"

namespace mcpp {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;                  // meaningful when optimal
  std::vector<Rat> optimizer; // a vertex of the feasible set when optimal
  long pivots = 0;
};

// Exact primal simplex with Bland's smallest-index anti-cycling rule.
//
// Free variables are split into nonnegative pairs and equalities become
// opposite inequality pairs; a phase-1 auxiliary variable restores
// feasibility when needed. The raw optimum is then purified: while the
// tight rows at the optimizer do not span the full space, we walk along a
// cost-neutral nullspace direction until another row becomes tight, so the
// reported optimizer is a genuine vertex of the input system whenever its
// feasible set is a polytope.
LpResult lp_maximize(const LinearSystem& sys, const RVector& objective);

}  // namespace mcpp
