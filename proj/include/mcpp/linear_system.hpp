#pragma once

#include "mcpp/linalg.hpp"

#include <string>
#include <vector>

namespace mcpp {

enum class RowKind { equality, less_equal };

// Provenance of relaxation rows; plain systems use `none`.
enum class RowTag {
  none,
  multiple_choice,
  vertex_edge,
  tree_intersection,
  pair_intersection,
  nonnegativity,
  affine_hull,
};

std::string to_string(RowTag t);

struct Row {
  RVector a;
  Rat rhs;
  RowKind kind = RowKind::less_equal;
  RowTag tag = RowTag::none;
};

// Equalities a.w = rhs and inequalities a.w <= rhs over one labelled space.
// Nonnegativity is stored as ordinary rows (-w_J <= 0).
struct LinearSystem {
  CoordsPtr coords;
  std::vector<Row> rows;

  explicit LinearSystem(CoordsPtr c) : coords(std::move(c)) {}

  void add_equality(RVector a, Rat rhs, RowTag tag = RowTag::none) {
    check(a);
    rows.push_back({std::move(a), std::move(rhs), RowKind::equality, tag});
  }
  void add_less_equal(RVector a, Rat rhs, RowTag tag = RowTag::none) {
    check(a);
    rows.push_back({std::move(a), std::move(rhs), RowKind::less_equal, tag});
  }
  // -w_J <= 0 for every coordinate.
  void add_nonnegativity() {
    for (size_t j = 0; j < coords->size(); ++j) {
      RVector a(coords);
      a.v[j] = -1;
      add_less_equal(std::move(a), Rat(0), RowTag::nonnegativity);
    }
  }

  size_t count(RowKind k) const {
    size_t n = 0;
    for (const auto& r : rows) n += (r.kind == k);
    return n;
  }
  size_t count(RowTag t) const {
    size_t n = 0;
    for (const auto& r : rows) n += (r.tag == t);
    return n;
  }

  bool satisfies(const std::vector<Rat>& x) const {
    for (const auto& r : rows) {
      const Rat lhs = r.a.dot(x);
      if (r.kind == RowKind::equality ? lhs != r.rhs : lhs > r.rhs) return false;
    }
    return true;
  }

  // Drops syntactically identical rows (same kind, coefficients and rhs).
  void dedup();

 private:
  void check(const RVector& a) const {
    if (!(*a.coords == *coords)) throw ValidationError("row labels do not match system labels");
  }
};

// Systems tagged with row provenance are plain linear systems.
using RelaxationSystem = LinearSystem;

}  // namespace mcpp
