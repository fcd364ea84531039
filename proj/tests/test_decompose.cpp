#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/decompose.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/vertex_enum.hpp"

using namespace mcpp;

TEST_CASE("shared blocks of a split") {
  Decomposition d{Hypergraph({0, 1}, {{0, 1}}), Hypergraph({1, 2}, {{1, 2}})};
  CHECK(shared_blocks(d) == Mono{1});
}

TEST_CASE("precondition: empty, single block, or common edge") {
  const Hypergraph path({0, 1, 2}, {{0, 1}, {1, 2}});
  CHECK(check_decomposition_precondition(
      {Hypergraph({0, 1}, {{0, 1}}), Hypergraph({1, 2}, {{1, 2}})}, path));

  const Hypergraph disjoint({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  CHECK(check_decomposition_precondition(
      {Hypergraph({0, 1}, {{0, 1}}), Hypergraph({2, 3}, {{2, 3}})}, disjoint));

  // Two 3-edges sharing a 2-block set that is an edge of both.
  const Hypergraph common({0, 1, 2, 3}, {{0, 1, 2}, {1, 2, 3}, {1, 2}});
  CHECK(check_decomposition_precondition(
      {Hypergraph({0, 1, 2}, {{0, 1, 2}, {1, 2}}), Hypergraph({1, 2, 3}, {{1, 2, 3}, {1, 2}})},
      common));

  // Same split but the shared pair is an edge of neither part.
  const Hypergraph bare({0, 1, 2, 3}, {{0, 1, 2}, {1, 2, 3}});
  CHECK_FALSE(check_decomposition_precondition(
      {Hypergraph({0, 1, 2}, {{0, 1, 2}}), Hypergraph({1, 2, 3}, {{1, 2, 3}})}, bare));

  // Parts must cover the hypergraph.
  CHECK_THROWS_AS(check_decomposition_precondition(
                      {Hypergraph({0, 1}, {{0, 1}}), Hypergraph({0, 1}, {{0, 1}})}, path),
                  ValidationError);
}

TEST_CASE("battery decompositions verify") {
  for (const auto& named : decomposition_battery()) {
    CAPTURE(named.name);
    const MonomialFamily fam = close_family(named.instance).family;
    CHECK(check_decomposition_precondition(named.split, fam.hypergraph()) == named.precondition);
    const DecompositionCheck res = verify_decomposition(named.split, fam);
    CHECK(res.ok);
  }
}

TEST_CASE("triangle bad split fails and admits a fractional intersection point") {
  const NamedDecomposition bad = triangle_bad_split();
  const MonomialFamily fam = close_family(bad.instance).family;
  CHECK_FALSE(check_decomposition_precondition(bad.split, fam.hypergraph()));

  // The intersection of the two projected polytopes is strictly larger than
  // the hull of the profiles: it has a fractional vertex.
  const PointSet verts = enumerate_vertices(intersection_system(bad.split, fam));
  const PointSet profiles = enumerate_profiles(fam);
  bool fractional = false;
  for (const auto& v : verts.points) {
    for (const auto& c : v) fractional |= !is_integer(c);
  }
  CHECK(fractional);
  CHECK(verts.size() > profiles.size());
}

TEST_CASE("intersection system is satisfied by every profile") {
  for (const auto& named : decomposition_battery()) {
    const MonomialFamily fam = close_family(named.instance).family;
    const LinearSystem sys = intersection_system(named.split, fam);
    for (const auto& w : enumerate_profiles(fam).points) CHECK(sys.satisfies(w));
  }
}
