#pragma once

#include <string>
#include <vector>

namespace mcpp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, or a short success summary
};

// The full structural-property suite over the built-in instance battery:
// exact polytope equality on acyclic instances, the triangle failure
// witness, LP/brute solver agreement on seeded random objectives, join-tree
// independence, the reduced-space bijection and affine-hull forms, the
// lifting equivalence sweep, decomposition checks, facet-face projection
// ranks, and the small-invariant pack. Every check is exact.
std::vector<CriterionResult> run_verification_suite(unsigned seed = 7, int random_objectives = 100);

}  // namespace mcpp
