#pragma once

#include "mcpp/decompose.hpp"
#include "mcpp/instance.hpp"

#include <string>
#include <vector>

namespace mcpp {

// A named desk-scale instance with known structure, shared by the tests and
// the command-line verification sweep.
struct NamedInstance {
  std::string name;
  Instance instance;
  bool acyclic = true;
  size_t family_size = 0;   // |closed family|, frozen as a structural check
  size_t vertex_guard = 24; // coordinate guard needed by vertex enumeration
};

// Named instances, all alpha-acyclic, ordered by size.
std::vector<NamedInstance> acyclic_battery();

// Non-alpha-acyclic companions: a triangle of blocks and a 4-cycle.
NamedInstance triangle_instance();
NamedInstance four_cycle_instance();

// The triangle objective rewarding pairwise disagreement between blocks;
// brute optimum 2 while the pairwise relaxation reaches 3.
Instance triangle_disagreement();

// Named decompositions used by the split checks.
struct NamedDecomposition {
  std::string name;
  Instance instance;
  Decomposition split;
  bool precondition = true;
};

std::vector<NamedDecomposition> decomposition_battery();
// The cover of the triangle whose shared blocks are not a common edge.
NamedDecomposition triangle_bad_split();

}  // namespace mcpp
