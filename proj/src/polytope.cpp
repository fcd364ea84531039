#include "mcpp/polytope.hpp"

namespace mcpp {

std::string to_string(IneqStatus s) {
  switch (s) {
    case IneqStatus::invalid: return "invalid";
    case IneqStatus::valid_not_tight: return "valid-not-tight";
    case IneqStatus::implicit_equality: return "implicit-equality";
    case IneqStatus::face: return "face";
    case IneqStatus::facet: return "facet";
  }
  return "?";
}

IneqCertificate certify_inequality(const RVector& a, const Rat& delta, const PointSet& vertices) {
  if (!(*a.coords == *vertices.coords))
    throw ValidationError("inequality labels do not match vertex labels");
  if (vertices.points.empty()) throw ValidationError("certify_inequality: empty vertex set");

  IneqCertificate cert;
  cert.tight_points = PointSet(vertices.coords);
  bool valid = true;
  for (const auto& p : vertices.points) {
    const Rat lhs = a.dot(p);
    if (lhs > delta) valid = false;
    if (lhs == delta) cert.tight_points.points.push_back(p);
  }
  cert.polytope_dim = affine_dim(vertices);
  cert.face_dim = cert.tight_points.points.empty() ? -1 : affine_dim(cert.tight_points);
  if (!valid)
    cert.status = IneqStatus::invalid;
  else if (cert.tight_points.size() == vertices.size())
    cert.status = IneqStatus::implicit_equality;
  else if (cert.tight_points.points.empty())
    cert.status = IneqStatus::valid_not_tight;
  else if (cert.face_dim == cert.polytope_dim - 1)
    cert.status = IneqStatus::facet;
  else
    cert.status = IneqStatus::face;
  return cert;
}

MemberResult member(const RVector& point, const PointSet& vertices) {
  if (!(*point.coords == *vertices.coords))
    throw ValidationError("point labels do not match vertex labels");
  if (vertices.points.empty()) throw ValidationError("member: empty vertex set");

  const size_t d = point.size();
  // LP variables: separator coefficients a_0..a_{d-1} and the offset (label d).
  std::vector<Mono> labels;
  for (size_t j = 0; j <= d; ++j) labels.push_back(Mono{static_cast<int>(j)});
  const CoordsPtr lp_coords = make_coords(std::move(labels));

  LinearSystem lp(lp_coords);
  for (const auto& v : vertices.points) {
    RVector row(lp_coords);
    for (size_t j = 0; j < d; ++j) row.v[j] = v[j];
    row.v[d] = -1;
    lp.add_less_equal(std::move(row), Rat(0));  // a.v - delta <= 0
  }
  // Box normalization keeps the LP bounded; scaling does not change the sign
  // of the separation value.
  Rat m = 1;
  for (size_t j = 0; j < d; ++j) {
    RVector up(lp_coords), down(lp_coords);
    up.v[j] = 1;
    down.v[j] = -1;
    lp.add_less_equal(std::move(up), Rat(1));
    lp.add_less_equal(std::move(down), Rat(1));
    Rat maxabs = 0;
    for (const auto& v : vertices.points)
      if (abs(v[j]) > maxabs) maxabs = abs(v[j]);
    if (abs(point.v[j]) > maxabs) maxabs = abs(point.v[j]);
    m += maxabs;
  }
  {
    RVector up(lp_coords), down(lp_coords);
    up.v[d] = 1;
    down.v[d] = -1;
    lp.add_less_equal(std::move(up), m);
    lp.add_less_equal(std::move(down), m);
  }

  RVector obj(lp_coords);
  for (size_t j = 0; j < d; ++j) obj.v[j] = point.v[j];
  obj.v[d] = -1;  // maximize a.point - delta

  const LpResult res = lp_maximize(lp, obj);
  if (res.status != LpStatus::optimal)
    throw InvariantViolation("separation LP must be bounded and feasible");

  MemberResult out;
  out.inside = (res.value <= 0);
  if (!out.inside) {
    out.separator_a = RVector(vertices.coords);
    for (size_t j = 0; j < d; ++j) out.separator_a.v[j] = res.optimizer[j];
    out.separator_delta = res.optimizer[d];
  }
  return out;
}

PolytopeComparison equal_polytopes(const LinearSystem& sysA, const PointSet& verticesB,
                                   int coordinate_guard) {
  if (!(*sysA.coords == *verticesB.coords))
    throw ValidationError("system labels do not match vertex labels");
  PolytopeComparison out;
  const PointSet vertsA = enumerate_vertices(sysA, coordinate_guard);
  for (const auto& p : vertsA.points)
    if (!verticesB.contains(p)) {
      out.counterexample = p;
      out.reason = "system vertex outside the vertex list's hull";
      return out;
    }
  for (const auto& p : verticesB.points)
    if (!sysA.satisfies(p)) {
      out.counterexample = p;
      out.reason = "listed point violates the system";
      return out;
    }
  out.equal = true;
  return out;
}

}  // namespace mcpp
