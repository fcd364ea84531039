#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/oracle.hpp"

#include <string>

namespace mcpp {

enum class SolveMethod { automatic, lp, brute };

struct SolveStats {
  size_t hypergraph_rank = 0;
  size_t max_block_size = 0;
  size_t family_size = 0;
  size_t equality_rows = 0;
  size_t inequality_rows = 0;
  long pivots = 0;
  double wall_seconds = 0.0;
};

struct SolveReport {
  Rat optimum;
  ChoicePoint argmax;
  std::string method;  // "lp-jointree" or "brute-force"
  bool acyclic = false;
  SolveStats stats;
};

// Exact solve. The LP route builds the join-tree system and maximizes the
// closed objective; its optimizer must come back 0-1 integral (anything else
// is an internal invariant violation, not an input error). `automatic`
// picks the LP route exactly when the induced hypergraph is alpha-acyclic;
// requesting `lp` on a non-acyclic instance is a validation error.
SolveReport solve(const Instance& inst, SolveMethod method = SolveMethod::automatic,
                  size_t guard = kDefaultEnumerationGuard);

}  // namespace mcpp
