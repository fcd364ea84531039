#pragma once

#include "mcpp/hypergraph.hpp"
#include "mcpp/labels.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcpp {

// Disjoint blocks covering [n], indices 1-based. Every block has at least
// two members: each block is a decision with |I| choices.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  const std::vector<int>& block(int b) const { return blocks[static_cast<size_t>(b)]; }
  // Block id containing variable i, or -1.
  int block_of(int i) const;
};

// One objective monomial: a coefficient on a product of variables that
// touches each block at most once. vars empty = constant term.
struct Term {
  Mono vars;
  Rat coef;
};

struct Instance {
  Partition partition;
  std::vector<Term> terms;
};

struct Violation {
  std::string kind;  // overlap-between-blocks | block-union-not-n | singleton-block |
                     // monomial-hits-block-twice | duplicate-term | empty-block | bad-index
  std::string detail;
};

// Structural checks; empty result means the instance is well formed.
std::vector<Violation> validate(const Instance& inst);
void validate_or_throw(const Instance& inst);

// Drops terms that hit a block twice (they vanish on the feasible set) and
// merges duplicate monomials. Opt-in preprocessing; validate() still rejects
// such terms so user errors stay visible by default.
Instance simplify(const Instance& inst);

// E(J): the set of blocks J touches, as sorted block ids.
// Throws if J intersects some block more than once.
Mono edge_of(const Mono& vars, const Partition& p);

// Builds H(V,E): V = blocks, E = de-duplicated multi-block edges of terms.
Hypergraph induce_hypergraph(const Instance& inst);

// The closed monomial family: all singletons plus, for each hyperedge e,
// every monomial with exactly one variable per block of e. Grouped by edge
// and laid out in the global canonical order.
class MonomialFamily {
 public:
  MonomialFamily(Partition partition, Hypergraph hyper);

  const Partition& partition() const { return partition_; }
  const Hypergraph& hypergraph() const { return hyper_; }
  const CoordsPtr& coords() const { return coords_; }
  size_t size() const { return coords_->size(); }
  bool contains(const Mono& m) const { return coords_->contains(m); }

  // Monomials of one group: e is a sorted list of block ids, either a
  // singleton {b} or a hyperedge of H (or any block subset, for
  // intersection groups).
  std::vector<Mono> group(const Mono& edge_blocks) const;

  // Coordinate labels over L(V) u E, for the block-variable space.
  CoordsPtr block_coords() const { return block_coords_; }

 private:
  Partition partition_;
  Hypergraph hyper_;
  CoordsPtr coords_;
  CoordsPtr block_coords_;
};

// Closes the instance's family over the induced (or given super-) hypergraph
// and extends the coefficients with exact zeros. Returns the family plus the
// objective over its coordinates and the constant offset carried by empty
// monomials.
struct ClosedObjective {
  MonomialFamily family;
  std::vector<Rat> coefficients;  // aligned with family.coords()
  Rat offset;                     // constant terms live outside the family
};

ClosedObjective close_family(const Instance& inst);
ClosedObjective close_family(const Instance& inst, const Hypergraph& h);

}  // namespace mcpp
