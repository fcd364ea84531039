#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/relaxation.hpp"
#include "mcpp/simplex.hpp"
#include "mcpp/vertex_enum.hpp"

using namespace mcpp;

namespace {

const NamedInstance& battery_instance(const std::string& name) {
  static const std::vector<NamedInstance> battery = acyclic_battery();
  for (const auto& b : battery)
    if (b.name == name) return b;
  throw std::runtime_error("no battery instance " + name);
}

MonomialFamily family_of(const std::string& name) {
  return close_family(battery_instance(name).instance).family;
}

}  // namespace

TEST_CASE("join-tree system row counts, single edge blocks (2,2)") {
  const RelaxationSystem sys = jointree_relaxation(family_of("pair22"));
  CHECK(sys.count(RowTag::multiple_choice) == 2);
  CHECK(sys.count(RowTag::vertex_edge) == 4);
  CHECK(sys.count(RowTag::tree_intersection) == 0);
  CHECK(sys.count(RowTag::nonnegativity) == 8);
}

TEST_CASE("join-tree system row counts, path over three blocks") {
  // The two edges share a single block, so no intersection-matching rows.
  const RelaxationSystem sys = jointree_relaxation(family_of("path3"));
  CHECK(sys.count(RowTag::multiple_choice) == 3);
  CHECK(sys.count(RowTag::vertex_edge) == 8);
  CHECK(sys.count(RowTag::tree_intersection) == 0);
  CHECK(sys.count(RowTag::nonnegativity) == 14);
  CHECK(sys.count(RowKind::equality) == 11);
}

TEST_CASE("two 3-edges sharing two blocks give four matching rows") {
  const RelaxationSystem sys = jointree_relaxation(family_of("share-two"));
  CHECK(sys.count(RowTag::tree_intersection) == 4);
}

TEST_CASE("pairwise system of the triangle") {
  const MonomialFamily fam = close_family(triangle_disagreement()).family;
  const RelaxationSystem sys = pairwise_relaxation(fam);
  CHECK(sys.count(RowTag::multiple_choice) == 3);
  CHECK(sys.count(RowTag::vertex_edge) == 12);
  // All pairwise edge intersections are single blocks.
  CHECK(sys.count(RowTag::pair_intersection) == 0);
  // One nonnegativity row per family coordinate: 6 singletons + 3*4 pairs.
  CHECK(sys.count(RowTag::nonnegativity) == 18);
}

TEST_CASE("profiles satisfy both relaxations exactly") {
  for (const char* name : {"pair22", "path3", "share-two", "triple-closed"}) {
    const MonomialFamily fam = family_of(name);
    const RelaxationSystem tree = jointree_relaxation(fam);
    const RelaxationSystem pair = pairwise_relaxation(fam);
    for (const auto& w : enumerate_profiles(fam).points) {
      CHECK(tree.satisfies(w));
      CHECK(pair.satisfies(w));
    }
  }
}

TEST_CASE("join-tree system vertices are exactly the profiles, pair22") {
  const MonomialFamily fam = family_of("pair22");
  const PointSet verts = enumerate_vertices(jointree_relaxation(fam));
  const PointSet profiles = enumerate_profiles(fam);
  REQUIRE(verts.size() == profiles.size());
  for (const auto& v : verts.points) CHECK(profiles.contains(v));
}

TEST_CASE("triangle pairwise system admits a fractional vertex") {
  const MonomialFamily fam = close_family(triangle_disagreement()).family;
  const PointSet verts = enumerate_vertices(pairwise_relaxation(fam));
  const PointSet profiles = enumerate_profiles(fam);
  bool fractional = false;
  for (const auto& v : verts.points) {
    bool integral = true;
    for (const auto& c : v) integral &= is_integer(c);
    if (!integral) fractional = true;
  }
  CHECK(verts.size() > profiles.size());
  CHECK(fractional);
}

TEST_CASE("lp over the triangle relaxation beats the true optimum") {
  const Instance tri = triangle_disagreement();
  const ClosedObjective co = close_family(tri);
  RVector obj(co.family.coords(), co.coefficients);
  const LpResult lp = lp_maximize(pairwise_relaxation(co.family), obj);
  REQUIRE(lp.status == LpStatus::optimal);
  CHECK(lp.value == 3);
  CHECK(brute_force_optimum(tri).value == 2);
  // The relaxed optimizer sits at the all-halves point on the singletons.
  const auto coords = co.family.coords();
  for (const auto& label : coords->labels())
    if (label.size() == 1)
      CHECK(lp.optimizer[static_cast<size_t>(coords->index_of(label))] == Rat(1, 2));
}

TEST_CASE("lp over the join-tree system matches brute force on acyclic instances") {
  for (const char* name : {"pair22", "pair32", "star3", "five-block"}) {
    const auto& named = battery_instance(name);
    const ClosedObjective co = close_family(named.instance);
    RVector obj(co.family.coords(), co.coefficients);
    const LpResult lp = lp_maximize(jointree_relaxation(co.family), obj);
    REQUIRE(lp.status == LpStatus::optimal);
    CHECK(lp.value + co.offset == brute_force_optimum(named.instance).value);
  }
}

TEST_CASE("affine hull, transversal form, single edge blocks (2,2)") {
  const MonomialFamily fam = family_of("pair22");
  const RelaxationSystem sys = affine_hull_system(fam, {2, 4}, AffineHullForm::transversal);
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : sys.rows) rows.push_back(r.a.v);
  CHECK(rank(rows) == 5);  // |family| - |reduced family| = 8 - 3
  for (const auto& w : enumerate_profiles(fam).points) CHECK(sys.satisfies(w));
  CHECK(affine_rank(enumerate_profiles(fam)) == 3);
}

TEST_CASE("no edges: affine hull dimension is the sum of block sizes minus one each") {
  Instance inst;
  inst.partition = {5, {{1, 2, 3}, {4, 5}}};
  inst.terms = {{{1}, Rat(1)}};
  const MonomialFamily fam = close_family(inst).family;
  CHECK(affine_rank(enumerate_profiles(fam)) == 3);  // (3-1) + (2-1)
}

TEST_CASE("transversal and symmetric forms define the same subspace") {
  for (const char* name : {"pair22", "path3", "triple-closed"}) {
    const MonomialFamily fam = family_of(name);
    const Mono d = default_transversal(fam.partition());
    const RelaxationSystem tf = affine_hull_system(fam, d, AffineHullForm::transversal);
    const RelaxationSystem sf = affine_hull_system(fam, {}, AffineHullForm::symmetric);
    CHECK(same_affine_subspace(tf, sf));
  }
}

TEST_CASE("affine hull requires downward closure") {
  const MonomialFamily fam = family_of("triple");  // bare 3-edge
  CHECK_THROWS_AS(affine_hull_system(fam, default_transversal(fam.partition()),
                                     AffineHullForm::transversal),
                  ValidationError);
}

TEST_CASE("pairwise system adds nothing beyond the join-tree system") {
  for (const char* name : {"path3", "share-two", "star3"}) {
    const MonomialFamily fam = family_of(name);
    for (const auto& t : enumerate_join_trees(fam.hypergraph()))
      CHECK(check_pairwise_equals_jointree(fam, t));
  }
}

TEST_CASE("different join trees give the same solution set") {
  const MonomialFamily fam = family_of("star3");
  const auto trees = enumerate_join_trees(fam.hypergraph());
  REQUIRE(trees.size() >= 2);
  const PointSet v0 = enumerate_vertices(jointree_relaxation(fam, trees[0]));
  const PointSet v1 = enumerate_vertices(jointree_relaxation(fam, trees[1]));
  CHECK(v0.points == v1.points);
}
