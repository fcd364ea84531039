#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/linalg.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/simplex.hpp"
#include "mcpp/vertex_enum.hpp"

using namespace mcpp;

namespace {

CoordsPtr two_vars() { return make_coords({{1}, {2}}); }

LinearSystem one_choice_system() {
  // w1 + w2 = 1, w >= 0
  LinearSystem sys(two_vars());
  RVector a(sys.coords);
  a.at({1}) = 1;
  a.at({2}) = 1;
  sys.add_equality(std::move(a), Rat(1));
  sys.add_nonnegativity();
  return sys;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rat(3, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank basics") {
  CHECK(rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
  CHECK(rank({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
  // Third row is the sum of the first two.
  CHECK(rank({{Rat(1), Rat(1), Rat(0)},
              {Rat(0), Rat(1), Rat(1)},
              {Rat(1), Rat(2), Rat(1)}}) == 2);
}

TEST_CASE("rank equals rank of transpose") {
  RMatrix m(make_coords({{1}, {2}, {3}}));
  m.add_row({Rat(1), Rat(2), Rat(3)});
  m.add_row({Rat(2), Rat(4), Rat(6)});
  m.add_row({Rat(0), Rat(1), Rat(-1)});
  m.add_row({Rat(1, 2), Rat(1), Rat(3, 2)});
  CHECK(rank(m) == rank(m.transposed()));
}

TEST_CASE("affine rank") {
  PointSet single(two_vars(), {{Rat(3), Rat(4)}});
  CHECK(affine_rank(single) == 0);
  PointSet tri(two_vars(), {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(affine_rank(tri) == 2);
}

TEST_CASE("affine rank of the reduced vertex set, single edge blocks (2,2)") {
  const Instance inst = acyclic_battery()[0].instance;  // pair22
  const MonomialFamily fam = close_family(inst).family;
  const Mono d = default_transversal(inst.partition);
  const PointSet reduced = enumerate_reduced_profiles(fam, d);
  CHECK(reduced.size() == 4);
  CHECK(affine_rank(reduced) == 3);
}

TEST_CASE("solve_linear basics") {
  auto res = solve_linear({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(3), Rat(1)});
  REQUIRE(res.consistent);
  CHECK(res.particular == std::vector<Rat>{Rat(2), Rat(1)});
  CHECK(res.nullspace.empty());

  auto under = solve_linear({{Rat(1), Rat(1)}}, {Rat(1)});
  REQUIRE(under.consistent);
  CHECK(under.nullspace.size() == 1);

  auto bad = solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)});
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("lp on the one-choice segment") {
  const LinearSystem sys = one_choice_system();
  RVector obj(sys.coords);
  obj.at({1}) = 1;
  const LpResult r = lp_maximize(sys, obj);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
  CHECK(r.optimizer == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("lp detects unboundedness and infeasibility") {
  LinearSystem free_ray(two_vars());
  free_ray.add_nonnegativity();
  RVector obj(free_ray.coords);
  obj.at({1}) = 1;
  CHECK(lp_maximize(free_ray, obj).status == LpStatus::unbounded);

  LinearSystem empty(two_vars());
  RVector a(empty.coords);
  a.at({1}) = 1;
  empty.add_less_equal(a, Rat(-1));
  empty.add_nonnegativity();
  CHECK(lp_maximize(empty, obj).status == LpStatus::infeasible);
}

TEST_CASE("vertex enumeration of the one-choice segment") {
  const PointSet verts = enumerate_vertices(one_choice_system());
  REQUIRE(verts.size() == 2);
  CHECK(verts.contains({Rat(1), Rat(0)}));
  CHECK(verts.contains({Rat(0), Rat(1)}));
}

TEST_CASE("vertex enumeration respects the coordinate guard") {
  LinearSystem sys(make_coords({{1}, {2}, {3}}));
  sys.add_nonnegativity();
  CHECK_THROWS_AS(enumerate_vertices(sys, 2), GuardExceeded);
}
