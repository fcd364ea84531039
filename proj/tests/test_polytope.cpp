#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/polytope.hpp"
#include "mcpp/relaxation.hpp"

using namespace mcpp;

namespace {

struct Fixture {
  Instance inst;
  MonomialFamily fam;
  PointSet profiles;

  explicit Fixture(const Instance& i)
      : inst(i), fam(close_family(i).family), profiles(enumerate_profiles(fam)) {}
};

Fixture pair22() { return Fixture(acyclic_battery()[0].instance); }

}  // namespace

TEST_CASE("certify: a face that is not a facet") {
  const Fixture f = pair22();
  RVector a(f.fam.coords());
  a.at({1}) = 1;
  const IneqCertificate cert = certify_inequality(a, Rat(1), f.profiles);
  CHECK(cert.status == IneqStatus::face);
  CHECK(cert.tight_points.size() == 2);
  CHECK(cert.face_dim == 1);
  CHECK(cert.polytope_dim == 3);
  CHECK_FALSE(cert.is_facet());
}

TEST_CASE("certify: nonnegativity of a pair coordinate is a facet") {
  const Fixture f = pair22();
  RVector a(f.fam.coords());
  a.at({1, 3}) = -1;
  const IneqCertificate cert = certify_inequality(a, Rat(0), f.profiles);
  CHECK(cert.status == IneqStatus::facet);
  CHECK(cert.tight_points.size() == 3);
  CHECK(cert.face_dim == 2);
}

TEST_CASE("certify: block sum is an implicit equality") {
  const Fixture f = pair22();
  RVector a(f.fam.coords());
  a.at({1}) = 1;
  a.at({2}) = 1;
  const IneqCertificate cert = certify_inequality(a, Rat(1), f.profiles);
  CHECK(cert.status == IneqStatus::implicit_equality);
  CHECK(cert.tight_points.size() == f.profiles.size());
}

TEST_CASE("certify: invalid and never-tight inequalities") {
  const Fixture f = pair22();
  RVector a(f.fam.coords());
  a.at({1}) = 1;
  CHECK(certify_inequality(a, Rat(1, 2), f.profiles).status == IneqStatus::invalid);
  CHECK(certify_inequality(a, Rat(2), f.profiles).status == IneqStatus::valid_not_tight);
}

TEST_CASE("membership: barycenter and vertices are inside") {
  const Fixture f = pair22();
  RVector bary(f.fam.coords());
  for (const auto& p : f.profiles.points)
    for (size_t j = 0; j < p.size(); ++j) bary.v[j] += p[j] / Rat(f.profiles.size());
  CHECK(member(bary, f.profiles).inside);
  CHECK(member(RVector(f.fam.coords(), f.profiles.points.front()), f.profiles).inside);
}

TEST_CASE("membership: the fractional triangle point is separated") {
  // Singletons 1/2, disagreeing pairs 1/2, agreeing pairs 0: satisfies the
  // pairwise system of the triangle but lies outside the hull of the 0-1
  // profiles.
  const Instance tri = triangle_disagreement();
  const MonomialFamily fam = close_family(tri).family;
  const PointSet profiles = enumerate_profiles(fam);
  RVector pt(fam.coords());
  for (const auto& label : fam.coords()->labels()) {
    if (label.size() == 1) {
      pt.at(label) = Rat(1, 2);
    } else {
      const bool agreeing = edge_of(label, tri.partition).size() == 2 &&
                            (label == Mono{1, 3} || label == Mono{2, 4} || label == Mono{3, 5} ||
                             label == Mono{4, 6} || label == Mono{1, 5} || label == Mono{2, 6});
      pt.at(label) = agreeing ? Rat(0) : Rat(1, 2);
    }
  }
  // Sanity: the point satisfies every pairwise-relaxation row.
  CHECK(pairwise_relaxation(fam).satisfies(pt.v));

  const MemberResult r = member(pt, profiles);
  REQUIRE_FALSE(r.inside);
  // The separator is a genuine certificate.
  CHECK(r.separator_a.dot(pt) > r.separator_delta);
  for (const auto& v : profiles.points) CHECK(r.separator_a.dot(v) <= r.separator_delta);
}

TEST_CASE("polytope equality on acyclic instances") {
  {
    const Fixture f = pair22();
    const PolytopeComparison cmp = equal_polytopes(jointree_relaxation(f.fam), f.profiles);
    CHECK(cmp.equal);
  }
  {
    const Fixture f = Fixture(acyclic_battery()[3].instance);  // path over three blocks
    const PolytopeComparison cmp = equal_polytopes(jointree_relaxation(f.fam), f.profiles);
    CHECK(cmp.equal);
  }
}

TEST_CASE("pairwise system of the triangle is strictly larger than the hull") {
  const Instance tri = triangle_disagreement();
  const MonomialFamily fam = close_family(tri).family;
  const PointSet profiles = enumerate_profiles(fam);
  const PolytopeComparison cmp = equal_polytopes(pairwise_relaxation(fam), profiles);
  REQUIRE_FALSE(cmp.equal);
  REQUIRE(cmp.counterexample.has_value());
  bool fractional = false;
  for (const auto& c : *cmp.counterexample) fractional |= !is_integer(c);
  CHECK(fractional);
}
