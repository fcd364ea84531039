#include "mcpp/battery.hpp"

namespace mcpp {

namespace {

Instance make(int n, std::vector<std::vector<int>> blocks, std::vector<Term> terms) {
  Instance inst;
  inst.partition.n = n;
  inst.partition.blocks = std::move(blocks);
  inst.terms = std::move(terms);
  validate_or_throw(inst);
  return inst;
}

}  // namespace

std::vector<NamedInstance> acyclic_battery() {
  std::vector<NamedInstance> out;
  // Single edge, blocks (2,2): 4 singletons + 4 pairs.
  out.push_back({"pair22",
                 make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}, {{2, 4}, Rat(2)}}),
                 true, 8, 24});
  // Single edge, blocks (3,2): 5 singletons + 6 pairs.
  out.push_back({"pair32",
                 make(5, {{1, 2, 3}, {4, 5}}, {{{1, 4}, Rat(1)}, {{2, 5}, Rat("3/2")}}),
                 true, 11, 24});
  // Single edge, blocks (3,3): 6 singletons + 9 pairs.
  out.push_back({"pair33",
                 make(6, {{1, 2, 3}, {4, 5, 6}}, {{{1, 4}, Rat(1)}, {{3, 6}, Rat(-1)}}),
                 true, 15, 24});
  // Path of two edges over three blocks.
  out.push_back({"path3",
                 make(6, {{1, 2}, {3, 4}, {5, 6}},
                      {{{1, 3}, Rat(1)}, {{3, 5}, Rat(1)}, {{2}, Rat("1/2")}}),
                 true, 14, 24});
  // Star: one center block, three leaves.
  out.push_back({"star3",
                 make(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
                      {{{1, 3}, Rat(1)}, {{1, 5}, Rat(2)}, {{1, 7}, Rat(-1)}}),
                 true, 20, 24});
  // One 3-edge alone.
  out.push_back({"triple",
                 make(6, {{1, 2}, {3, 4}, {5, 6}}, {{{1, 3, 5}, Rat(1)}}),
                 true, 14, 24});
  // One 3-edge with all its pairs: the downward-closed companion.
  out.push_back({"triple-closed",
                 make(6, {{1, 2}, {3, 4}, {5, 6}},
                      {{{1, 3, 5}, Rat(1)}, {{1, 3}, Rat(1)}, {{1, 5}, Rat(1)}, {{3, 5}, Rat(1)}}),
                 true, 26, 26});
  // Five blocks: a 3-edge, a hanging pair, one isolated block.
  out.push_back({"five-block",
                 make(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}},
                      {{{1, 3, 5}, Rat(1)}, {{5, 7}, Rat(2)}, {{9}, Rat(1)}}),
                 true, 22, 24});
  // Two 3-edges sharing two blocks.
  out.push_back({"share-two",
                 make(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
                      {{{1, 3, 5}, Rat(1)}, {{3, 5, 7}, Rat(1)}}),
                 true, 24, 24});
  return out;
}

NamedInstance triangle_instance() {
  return {"triangle", triangle_disagreement(), false, 18, 24};
}

NamedInstance four_cycle_instance() {
  return {"four-cycle",
          make(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
               {{{1, 3}, Rat(1)}, {{3, 5}, Rat(1)}, {{5, 7}, Rat(1)}, {{1, 7}, Rat(1)}}),
          false, 24, 24};
}

Instance triangle_disagreement() {
  // Reward every pair of blocks that chooses different slots.
  return make(6, {{1, 2}, {3, 4}, {5, 6}},
              {{{1, 4}, Rat(1)},
               {{2, 3}, Rat(1)},
               {{3, 6}, Rat(1)},
               {{4, 5}, Rat(1)},
               {{1, 6}, Rat(1)},
               {{2, 5}, Rat(1)}});
}

std::vector<NamedDecomposition> decomposition_battery() {
  std::vector<NamedDecomposition> out;
  {
    NamedDecomposition d;
    d.name = "path3-split";
    d.instance = make(6, {{1, 2}, {3, 4}, {5, 6}}, {{{1, 3}, Rat(1)}, {{3, 5}, Rat(1)}});
    d.split.h1 = Hypergraph({0, 1}, {{0, 1}});
    d.split.h2 = Hypergraph({1, 2}, {{1, 2}});
    out.push_back(std::move(d));
  }
  {
    NamedDecomposition d;
    d.name = "disjoint-union";
    d.instance = make(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}, {{{1, 3}, Rat(1)}, {{5, 7}, Rat(1)}});
    d.split.h1 = Hypergraph({0, 1}, {{0, 1}});
    d.split.h2 = Hypergraph({2, 3}, {{2, 3}});
    out.push_back(std::move(d));
  }
  {
    NamedDecomposition d;
    d.name = "shared-edge";
    d.instance = make(6, {{1, 2}, {3, 4}, {5, 6}}, {{{1, 3, 5}, Rat(1)}, {{3, 5}, Rat(1)}});
    d.split.h1 = Hypergraph({0, 1, 2}, {{0, 1, 2}, {1, 2}});
    d.split.h2 = Hypergraph({1, 2}, {{1, 2}});
    out.push_back(std::move(d));
  }
  return out;
}

NamedDecomposition triangle_bad_split() {
  NamedDecomposition d;
  d.name = "triangle-bad-split";
  d.instance = triangle_disagreement();
  d.split.h1 = Hypergraph({0, 1, 2}, {{0, 1}, {1, 2}});
  d.split.h2 = Hypergraph({0, 2}, {{0, 2}});
  d.precondition = false;
  return d;
}

}  // namespace mcpp
