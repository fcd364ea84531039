#pragma once

#include "mcpp/labels.hpp"

#include <optional>
#include <vector>

namespace mcpp {

// A hyperedge is a sorted set of block ids with at least two members.
using Edge = Mono;

// Hypergraph over partition blocks. Vertices are block ids; isolated
// vertices are permitted.
struct Hypergraph {
  std::vector<int> vertices;  // sorted block ids
  std::vector<Edge> edges;    // canonical order, no duplicates

  Hypergraph() = default;
  Hypergraph(std::vector<int> v, std::vector<Edge> e);

  bool has_edge(const Edge& e) const;
  bool has_vertex(int b) const;
  size_t rank() const;  // max edge cardinality, 0 if no edges

  bool is_subhypergraph_of(const Hypergraph& h) const;
};

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);

// Tree over the edge set with the running-intersection property.
struct JoinTree {
  std::vector<Edge> nodes;                       // = hypergraph edges
  std::vector<std::pair<int, int>> tree_edges;   // index pairs into nodes, i<j
};

// Independent running-intersection verifier, quantified over all node pairs.
bool is_valid_join_tree(const Hypergraph& h, const JoinTree& t);

struct AcyclicityResult {
  bool acyclic = false;
  std::optional<JoinTree> join_tree;       // witness when acyclic
  std::optional<Hypergraph> irreducible;   // GYO residual when not
};

// GYO reduction; the residual hypergraph is the counter-witness.
AcyclicityResult is_alpha_acyclic(const Hypergraph& h);

// Deterministic join tree: maximum-weight spanning tree of the edge
// intersection graph (weight |e n e'|), ties broken by lexicographic edge
// order, verified against the running-intersection property before return.
// Throws ValidationError when H is not alpha-acyclic.
JoinTree build_join_tree(const Hypergraph& h);

// All join trees of H, via Pruefer-sequence enumeration of spanning trees.
// Desk-scale only (|E| <= 6 guard).
std::vector<JoinTree> enumerate_join_trees(const Hypergraph& h, size_t max_edges = 6);

// True iff every >=2-subset of every edge is an edge.
bool is_downward_closed(const Hypergraph& h);

// Minimal downward-closed supergraph on the same vertices. Idempotent.
Hypergraph downward_closure(const Hypergraph& h);

}  // namespace mcpp
