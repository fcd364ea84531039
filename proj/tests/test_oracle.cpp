#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/oracle.hpp"

#include <set>

using namespace mcpp;

namespace {

const NamedInstance& battery_instance(const std::string& name) {
  static const std::vector<NamedInstance> battery = acyclic_battery();
  for (const auto& b : battery)
    if (b.name == name) return b;
  throw std::runtime_error("no battery instance " + name);
}

}  // namespace

TEST_CASE("choice enumeration counts and order") {
  const Partition p22{4, {{1, 2}, {3, 4}}};
  const auto pts = enumerate_choices(p22);
  REQUIRE(pts.size() == 4);
  CHECK(pts.front().x == std::vector<int>{0, 1, 0, 1});  // lexicographically first
  CHECK(pts.back().x == std::vector<int>{1, 0, 1, 0});

  const Partition p32{5, {{1, 2, 3}, {4, 5}}};
  CHECK(enumerate_choices(p32).size() == 6);

  const Partition path{6, {{1, 2}, {3, 4}, {5, 6}}};
  CHECK(enumerate_choices(path).size() == 8);

  CHECK_THROWS_AS(enumerate_choices(p32, 5), GuardExceeded);
}

TEST_CASE("profile of a choice point") {
  const auto& p22 = battery_instance("pair22");
  const MonomialFamily fam = close_family(p22.instance).family;

  ChoicePoint x{{1, 0, 1, 0}};
  const auto w = profile_of(x, fam);
  const auto at = [&](const Mono& m) { return w[static_cast<size_t>(fam.coords()->index_of(m))]; };
  CHECK(at({1}) == 1);
  CHECK(at({3}) == 1);
  CHECK(at({1, 3}) == 1);
  CHECK(at({2}) == 0);
  CHECK(at({4}) == 0);
  CHECK(at({1, 4}) == 0);
  CHECK(at({2, 4}) == 0);

  ChoicePoint y{{0, 1, 0, 1}};
  const auto w2 = profile_of(y, fam);
  Rat total = 0;
  for (const auto& c : w2) total += c;
  CHECK(w2[static_cast<size_t>(fam.coords()->index_of({2, 4}))] == 1);
  CHECK(total == 3);  // two singletons and one pair are on
}

TEST_CASE("profiles are 0-1, one per choice point, and injective") {
  for (const char* name : {"pair22", "path3", "triple-closed"}) {
    const auto& named = battery_instance(name);
    const MonomialFamily fam = close_family(named.instance).family;
    const PointSet profiles = enumerate_profiles(fam);
    CHECK(profiles.size() == enumerate_choices(named.instance.partition).size());
    std::set<std::vector<Rat>> distinct(profiles.points.begin(), profiles.points.end());
    CHECK(distinct.size() == profiles.size());
    for (const auto& p : profiles.points)
      for (const auto& c : p) CHECK(is_zero_one(c));
  }
}

TEST_CASE("block-space vertex enumeration") {
  const auto& p22 = battery_instance("pair22");
  const MonomialFamily fam = close_family(p22.instance).family;
  const PointSet verts = enumerate_multilinear_vertices(fam);
  REQUIRE(verts.size() == 4);  // 2^|V|
  for (const auto& z : verts.points) {
    const Rat z0 = z[static_cast<size_t>(verts.coords->index_of({0}))];
    const Rat z1 = z[static_cast<size_t>(verts.coords->index_of({1}))];
    const Rat ze = z[static_cast<size_t>(verts.coords->index_of({0, 1}))];
    CHECK(ze == z0 * z1);
  }
}

TEST_CASE("transversals and the reduced space") {
  const Partition p{4, {{1, 2}, {3, 4}}};
  CHECK(is_transversal({2, 4}, p));
  CHECK(is_transversal({1, 3}, p));
  CHECK_FALSE(is_transversal({1, 2}, p));
  CHECK_FALSE(is_transversal({1}, p));
  CHECK(default_transversal(p) == Mono{2, 4});

  const auto& p22 = battery_instance("pair22");
  const MonomialFamily fam = close_family(p22.instance).family;
  const CoordsPtr red = reduced_coords(fam, {2, 4});
  CHECK(red->labels() == std::vector<Mono>{{1}, {3}, {1, 3}});

  const PointSet reduced = enumerate_reduced_profiles(fam, {2, 4});
  CHECK(reduced.size() == 4);  // projection stays injective here
}

TEST_CASE("brute force optimum") {
  const auto& p22 = battery_instance("pair22");
  // pair22 objective: x1 x3 + 2 x2 x4.
  const BruteResult r = brute_force_optimum(p22.instance);
  CHECK(r.value == 2);
  CHECK(r.argmax.x == std::vector<int>{0, 1, 0, 1});

  Instance zero = p22.instance;
  zero.terms.clear();
  const BruteResult z = brute_force_optimum(zero);
  CHECK(z.value == 0);
  CHECK(z.argmax.x == std::vector<int>{0, 1, 0, 1});  // lexicographically first

  // Triangle disagreement objective: best is 2 of the 3 pairs differing.
  CHECK(brute_force_optimum(triangle_disagreement()).value == 2);
}
