#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/instance.hpp"

using namespace mcpp;

namespace {

Instance make(int n, std::vector<std::vector<int>> blocks, std::vector<Term> terms) {
  Instance inst;
  inst.partition.n = n;
  inst.partition.blocks = std::move(blocks);
  inst.terms = std::move(terms);
  return inst;
}

bool has_violation(const Instance& inst, const std::string& kind) {
  for (const auto& v : validate(inst))
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("well-formed instance validates cleanly") {
  CHECK(validate(make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}})).empty());
}

TEST_CASE("validation catches structural faults") {
  CHECK(has_violation(make(4, {{1, 2}, {3, 4}}, {{{1, 2}, Rat(1)}}),
                      "monomial-hits-block-twice"));
  CHECK(has_violation(make(3, {{1, 2}, {2, 3}}, {}), "overlap-between-blocks"));
  CHECK(has_violation(make(5, {{1, 2}, {3, 4}}, {}), "block-union-not-n"));
  CHECK(has_violation(make(3, {{1, 2}, {3}}, {}), "singleton-block"));
  CHECK(has_violation(make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}, {{1, 3}, Rat(2)}}),
                      "duplicate-term"));
  CHECK(has_violation(make(4, {{1, 2}, {3, 4}}, {{{1, 5}, Rat(1)}}), "bad-index"));
  CHECK_THROWS_AS(validate_or_throw(make(3, {{1, 2}, {2, 3}}, {})), ValidationError);
}

TEST_CASE("simplify drops vanishing terms and merges duplicates") {
  const Instance inst = make(4, {{1, 2}, {3, 4}},
                             {{{1, 2}, Rat(5)}, {{1, 3}, Rat(1)}, {{1, 3}, Rat(2)}});
  const Instance s = simplify(inst);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].vars == Mono{1, 3});
  CHECK(s.terms[0].coef == Rat(3));
}

TEST_CASE("edge_of maps monomials to block sets") {
  const Partition p{4, {{1, 2}, {3, 4}}};
  CHECK(edge_of({1, 3}, p) == Mono{0, 1});
  CHECK(edge_of({2}, p) == Mono{0});
  // Same blocks regardless of which member is chosen.
  CHECK(edge_of({1, 4}, p) == edge_of({1, 3}, p));
  CHECK_THROWS_AS(edge_of({1, 2}, p), ValidationError);
}

TEST_CASE("induced hypergraph") {
  const Instance p22 = make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}, {{2}, Rat(1)}});
  const Hypergraph h = induce_hypergraph(p22);
  CHECK(h.vertices == std::vector<int>{0, 1});
  CHECK(h.edges == std::vector<Edge>{{0, 1}});

  const Instance singles = make(4, {{1, 2}, {3, 4}}, {{{1}, Rat(1)}, {{3}, Rat(2)}});
  CHECK(induce_hypergraph(singles).edges.empty());

  const Instance path3 = make(6, {{1, 2}, {3, 4}, {5, 6}}, {{{1, 3}, Rat(1)}, {{3, 5}, Rat(1)}});
  CHECK(induce_hypergraph(path3).edges == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("closed family sizes") {
  // Single edge on blocks (2,2): 4 singletons + 4 pairs.
  const auto p22 = close_family(make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}}));
  CHECK(p22.family.size() == 8);
  CHECK(p22.family.group({0, 1}).size() == 4);

  // No edges over n = 4: singletons only.
  const auto loose = close_family(make(4, {{1, 2}, {3, 4}}, {{{1}, Rat(1)}}));
  CHECK(loose.family.size() == 4);

  // Blocks (3,2) and one edge: 5 singletons + 6 pairs.
  const auto p32 = close_family(make(5, {{1, 2, 3}, {4, 5}}, {{{1, 4}, Rat(1)}}));
  CHECK(p32.family.size() == 11);
  CHECK(p32.family.group({0, 1}).size() == 6);
}

TEST_CASE("closed objective carries coefficients and offset") {
  const Instance inst = make(4, {{1, 2}, {3, 4}},
                             {{{1, 3}, Rat(3, 2)}, {{2}, Rat(-1)}, {{}, Rat(5)}});
  const ClosedObjective co = close_family(inst);
  CHECK(co.offset == Rat(5));
  CHECK(co.coefficients[static_cast<size_t>(co.family.coords()->index_of({1, 3}))] == Rat(3, 2));
  CHECK(co.coefficients[static_cast<size_t>(co.family.coords()->index_of({2}))] == Rat(-1));
  CHECK(co.coefficients[static_cast<size_t>(co.family.coords()->index_of({2, 4}))] == 0);
}

TEST_CASE("closing over a super-hypergraph keeps the extra edges") {
  const Instance inst = make(4, {{1, 2}, {3, 4}}, {{{1}, Rat(1)}});
  const Hypergraph super({0, 1}, {{0, 1}});
  CHECK(close_family(inst, super).family.size() == 8);
  // The given hypergraph must contain the induced one.
  const Instance edgy = make(4, {{1, 2}, {3, 4}}, {{{1, 3}, Rat(1)}});
  CHECK_THROWS_AS(close_family(edgy, Hypergraph({0, 1}, {})), ValidationError);
}

TEST_CASE("battery instances validate and freeze their family sizes") {
  for (const auto& named : acyclic_battery()) {
    CAPTURE(named.name);
    CHECK(validate(named.instance).empty());
    CHECK(close_family(named.instance).family.size() == named.family_size);
  }
  CHECK(close_family(triangle_instance().instance).family.size() == 18);
  CHECK(close_family(four_cycle_instance().instance).family.size() == 24);
}
