#pragma once

#include "mcpp/simplex.hpp"
#include "mcpp/vertex_enum.hpp"

#include <optional>
#include <string>

namespace mcpp {

enum class IneqStatus { invalid, valid_not_tight, implicit_equality, face, facet };

std::string to_string(IneqStatus s);

struct IneqCertificate {
  IneqStatus status = IneqStatus::invalid;
  PointSet tight_points;
  int face_dim = -1;      // affine dimension of the tight set, -1 when empty
  int polytope_dim = 0;   // affine dimension of the vertex set

  bool is_facet() const { return status == IneqStatus::facet; }
};

// Classifies a.x <= delta against the explicit vertex list of a polytope:
// invalid (some vertex violates it), implicit equality (every vertex tight),
// valid but never tight, a proper face, or a facet (tight-set dimension one
// below the polytope's).
IneqCertificate certify_inequality(const RVector& a, const Rat& delta, const PointSet& vertices);

struct MemberResult {
  bool inside = false;
  // When outside: a.x <= delta holds on the hull and a.point > delta.
  RVector separator_a;
  Rat separator_delta;
};

// Convex hull membership via a separating-hyperplane LP with box-normalized
// coefficients. Exact either way; the separator is a rational certificate.
MemberResult member(const RVector& point, const PointSet& vertices);

struct PolytopeComparison {
  bool equal = false;
  std::optional<std::vector<Rat>> counterexample;
  std::string reason;  // human-readable direction of the failure
};

// Exact equality of {x : sysA} and conv(verticesB): every vertex of A is a
// listed B point and every B point satisfies A.
PolytopeComparison equal_polytopes(const LinearSystem& sysA, const PointSet& verticesB,
                                   int coordinate_guard = kDefaultCoordinateGuard);

}  // namespace mcpp
