#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/linalg.hpp"

#include <functional>
#include <map>

namespace mcpp {

// What to do with a product monomial that takes two choices from one block:
// such a monomial vanishes on every feasible point, but silently dropping it
// can hide user errors, so strict mode refuses instead.
enum class ConflictPolicy { strict, simplify };

// Sparse multilinear polynomial: monomials are sorted index sets ({} is the
// constant term). Repeated factors collapse (x*x = x). The same type serves
// two spaces: ground-set variables (keys are subsets of [n]) and block
// variables (keys are block subsets, where no conflicts exist).
class MultilinearPoly {
 public:
  using Terms = std::map<Mono, Rat, MonoLess>;

  MultilinearPoly() = default;

  static MultilinearPoly constant(Rat c);
  static MultilinearPoly variable(int i);
  static MultilinearPoly monomial(Mono vars, Rat coef);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Mono& vars, const Rat& coef);  // merges; drops zeros

  MultilinearPoly operator+(const MultilinearPoly& o) const;
  MultilinearPoly operator-(const MultilinearPoly& o) const;
  MultilinearPoly operator*(const Rat& c) const;

  // Evaluates with the given per-variable values (monomial = product).
  Rat evaluate(const std::function<Rat(int)>& value_of) const;

 private:
  Terms terms_;
};

// Product with block-conflict handling. `blocks` may be null when the
// variables are free of multiple-choice structure (block-variable space).
MultilinearPoly mul(const MultilinearPoly& a, const MultilinearPoly& b,
                    const Partition* blocks, ConflictPolicy policy);

// A linear functional a.w + offset over a labelled coordinate space.
struct LinearForm {
  RVector a;
  Rat offset;
};

// The linearization step: each monomial key becomes the coordinate of the
// same label. Every non-constant monomial must be present in `coords`;
// otherwise the polynomial is not linearizable over this family and a
// ValidationError names the offending monomial.
LinearForm linearize(const MultilinearPoly& p, const CoordsPtr& coords);

}  // namespace mcpp
