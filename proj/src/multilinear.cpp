#include "mcpp/multilinear.hpp"

#include <set>

namespace mcpp {

MultilinearPoly MultilinearPoly::constant(Rat c) {
  MultilinearPoly p;
  p.add_term({}, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(int i) {
  MultilinearPoly p;
  p.add_term({i}, Rat(1));
  return p;
}

MultilinearPoly MultilinearPoly::monomial(Mono vars, Rat coef) {
  MultilinearPoly p;
  p.add_term(sorted_mono(std::move(vars)), coef);
  return p;
}

void MultilinearPoly::add_term(const Mono& vars, const Rat& coef) {
  if (coef == 0) return;
  auto [it, fresh] = terms_.emplace(vars, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
  MultilinearPoly out = *this;
  for (const auto& [vars, coef] : o.terms_) out.add_term(vars, coef);
  return out;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& o) const {
  MultilinearPoly out = *this;
  for (const auto& [vars, coef] : o.terms_) out.add_term(vars, -coef);
  return out;
}

MultilinearPoly MultilinearPoly::operator*(const Rat& c) const {
  MultilinearPoly out;
  if (c == 0) return out;
  for (const auto& [vars, coef] : terms_) out.add_term(vars, coef * c);
  return out;
}

Rat MultilinearPoly::evaluate(const std::function<Rat(int)>& value_of) const {
  Rat total = 0;
  for (const auto& [vars, coef] : terms_) {
    Rat prod = coef;
    for (int i : vars) {
      if (prod == 0) break;
      prod *= value_of(i);
    }
    total += prod;
  }
  return total;
}

namespace {

// True if the merged monomial takes two choices from one block.
bool has_block_conflict(const Mono& vars, const Partition& blocks) {
  std::set<int> hit;
  for (int i : vars) {
    const int b = blocks.block_of(i);
    if (b >= 0 && !hit.insert(b).second) return true;
  }
  return false;
}

}  // namespace

MultilinearPoly mul(const MultilinearPoly& a, const MultilinearPoly& b,
                    const Partition* blocks, ConflictPolicy policy) {
  MultilinearPoly out;
  for (const auto& [va, ca] : a.terms())
    for (const auto& [vb, cb] : b.terms()) {
      Mono merged(va);
      merged.insert(merged.end(), vb.begin(), vb.end());
      merged = sorted_mono(std::move(merged));
      if (blocks && has_block_conflict(merged, *blocks)) {
        if (policy == ConflictPolicy::strict)
          throw ValidationError("block conflict in product monomial " + mono_to_string(merged));
        continue;  // the monomial vanishes on every feasible point
      }
      out.add_term(merged, ca * cb);
    }
  return out;
}

LinearForm linearize(const MultilinearPoly& p, const CoordsPtr& coords) {
  LinearForm out{RVector(coords), Rat(0)};
  for (const auto& [vars, coef] : p.terms()) {
    if (vars.empty()) {
      out.offset += coef;
      continue;
    }
    if (!coords->contains(vars))
      throw ValidationError("unlinearizable monomial " + mono_to_string(vars) +
                            ": not in the closed family");
    out.a.at(vars) += coef;
  }
  return out;
}

}  // namespace mcpp
