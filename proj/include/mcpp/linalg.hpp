#pragma once

#include "mcpp/labels.hpp"

#include <optional>
#include <vector>

namespace mcpp {

// Dense labelled vector of exact rationals.
struct RVector {
  CoordsPtr coords;
  std::vector<Rat> v;

  RVector() = default;
  explicit RVector(CoordsPtr c) : coords(std::move(c)), v(coords->size(), Rat(0)) {}
  RVector(CoordsPtr c, std::vector<Rat> vals) : coords(std::move(c)), v(std::move(vals)) {
    if (v.size() != coords->size()) throw ValidationError("vector length does not match labels");
  }

  size_t size() const { return v.size(); }
  Rat& at(const Mono& m) { return v[static_cast<size_t>(coords->index_of(m))]; }
  const Rat& at(const Mono& m) const { return v[static_cast<size_t>(coords->index_of(m))]; }

  Rat dot(const std::vector<Rat>& x) const {
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) s += v[i] * x[i];
    return s;
  }
  Rat dot(const RVector& x) const { return dot(x.v); }

  bool operator==(const RVector& o) const { return *coords == *o.coords && v == o.v; }
};

// Dense labelled matrix: rows share one column-label set.
struct RMatrix {
  CoordsPtr coords;
  std::vector<std::vector<Rat>> rows;

  explicit RMatrix(CoordsPtr c) : coords(std::move(c)) {}
  void add_row(std::vector<Rat> r) {
    if (r.size() != coords->size()) throw ValidationError("row length does not match labels");
    rows.push_back(std::move(r));
  }
  void add_row(const RVector& r) {
    if (!(*r.coords == *coords)) throw ValidationError("row labels do not match matrix labels");
    rows.push_back(r.v);
  }
  size_t num_rows() const { return rows.size(); }
  size_t num_cols() const { return coords->size(); }

  RMatrix transposed() const;
};

// A list of points in one labelled space, with the affine dimension cached
// once computed.
struct PointSet {
  CoordsPtr coords;
  std::vector<std::vector<Rat>> points;
  mutable std::optional<int> cached_affine_dim;

  PointSet() = default;
  explicit PointSet(CoordsPtr c) : coords(std::move(c)) {}
  PointSet(CoordsPtr c, std::vector<std::vector<Rat>> pts)
      : coords(std::move(c)), points(std::move(pts)) {
    for (const auto& p : points)
      if (p.size() != coords->size()) throw ValidationError("point length does not match labels");
  }
  size_t size() const { return points.size(); }
  bool contains(const std::vector<Rat>& p) const {
    for (const auto& q : points)
      if (q == p) return true;
    return false;
  }
};

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const RMatrix& m);
int rank(const std::vector<std::vector<Rat>>& rows);

// Dimension of the affine hull of the points: rank of {p - p0}.
// Throws on an empty set.
int affine_rank(const PointSet& points);

// Cached variant used by facet certification.
int affine_dim(const PointSet& points);

// Result of exact Gaussian elimination on A x = b.
struct LinSolveResult {
  bool consistent = false;
  int rank = 0;
  std::vector<Rat> particular;                 // one solution, if consistent
  std::vector<std::vector<Rat>> nullspace;     // basis of ker A
};

LinSolveResult solve_linear(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

}  // namespace mcpp
