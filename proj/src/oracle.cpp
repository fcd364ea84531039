#include "mcpp/oracle.hpp"

#include <algorithm>
#include <set>

namespace mcpp {

std::vector<ChoicePoint> enumerate_choices(const Partition& p, size_t guard) {
  size_t total = 1;
  for (const auto& blk : p.blocks) {
    total *= blk.size();
    if (total > guard)
      throw GuardExceeded("enumerate_choices: feasible set larger than guard " + std::to_string(guard));
  }
  std::vector<ChoicePoint> out;
  ChoicePoint cur;
  cur.x.assign(static_cast<size_t>(p.n), 0);
  auto rec = [&](auto&& self, int b) -> void {
    if (b == p.num_blocks()) {
      out.push_back(cur);
      return;
    }
    for (int i : p.block(b)) {
      cur.x[static_cast<size_t>(i - 1)] = 1;
      self(self, b + 1);
      cur.x[static_cast<size_t>(i - 1)] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> profile_of(const ChoicePoint& x, const MonomialFamily& fam) {
  const auto& labels = fam.coords()->labels();
  std::vector<Rat> w(labels.size(), Rat(0));
  for (size_t j = 0; j < labels.size(); ++j) {
    int prod = 1;
    for (int i : labels[j]) prod &= x.x[static_cast<size_t>(i - 1)];
    w[j] = prod;
  }
  return w;
}

PointSet enumerate_profiles(const MonomialFamily& fam, size_t guard) {
  PointSet out(fam.coords());
  std::set<std::vector<Rat>> found;
  for (const auto& x : enumerate_choices(fam.partition(), guard)) found.insert(profile_of(x, fam));
  out.points.assign(found.begin(), found.end());
  return out;
}

PointSet enumerate_multilinear_vertices(const MonomialFamily& fam, size_t guard) {
  const auto coords = fam.block_coords();
  const int nv = fam.partition().num_blocks();
  if (nv >= 63 || (size_t{1} << nv) > guard)
    throw GuardExceeded("enumerate_multilinear_vertices: 2^" + std::to_string(nv) +
                        " points exceed guard " + std::to_string(guard));
  std::set<std::vector<Rat>> found;
  const auto& labels = coords->labels();
  for (size_t mask = 0; mask < (size_t{1} << nv); ++mask) {
    std::vector<Rat> z(labels.size());
    for (size_t j = 0; j < labels.size(); ++j) {
      int prod = 1;
      for (int b : labels[j]) prod &= static_cast<int>((mask >> b) & 1);
      z[j] = prod;
    }
    found.insert(std::move(z));
  }
  PointSet out(coords);
  out.points.assign(found.begin(), found.end());
  return out;
}

bool is_transversal(const Mono& d, const Partition& p) {
  if (static_cast<int>(d.size()) != p.num_blocks()) return false;
  std::vector<int> count(static_cast<size_t>(p.num_blocks()), 0);
  for (int i : d) {
    const int b = p.block_of(i);
    if (b < 0) return false;
    ++count[static_cast<size_t>(b)];
  }
  for (int c : count)
    if (c != 1) return false;
  return true;
}

Mono default_transversal(const Partition& p) {
  Mono d;
  for (const auto& blk : p.blocks) d.push_back(blk.back());
  return sorted_mono(std::move(d));
}

CoordsPtr reduced_coords(const MonomialFamily& fam, const Mono& d) {
  if (!is_transversal(d, fam.partition()))
    throw ValidationError("distinguished set " + mono_to_string(d) + " is not a transversal");
  std::vector<Mono> kept;
  for (const auto& label : fam.coords()->labels()) {
    bool touches = false;
    for (int i : label)
      if (std::binary_search(d.begin(), d.end(), i)) touches = true;
    if (!touches) kept.push_back(label);
  }
  return make_coords(std::move(kept));
}

PointSet enumerate_reduced_profiles(const MonomialFamily& fam, const Mono& d, size_t guard) {
  const CoordsPtr red = reduced_coords(fam, d);
  std::vector<int> keep;  // positions of reduced labels in the full layout
  for (const auto& label : red->labels()) keep.push_back(fam.coords()->index_of(label));
  std::set<std::vector<Rat>> found;
  for (const auto& x : enumerate_choices(fam.partition(), guard)) {
    const std::vector<Rat> w = profile_of(x, fam);
    std::vector<Rat> v;
    v.reserve(keep.size());
    for (int j : keep) v.push_back(w[static_cast<size_t>(j)]);
    found.insert(std::move(v));
  }
  PointSet out(red);
  out.points.assign(found.begin(), found.end());
  return out;
}

BruteResult brute_force_optimum(const Instance& inst, size_t guard) {
  const auto choices = enumerate_choices(inst.partition, guard);
  if (choices.empty()) throw ValidationError("instance has an empty feasible set");
  BruteResult best;
  bool first = true;
  for (const auto& x : choices) {
    Rat val = 0;
    for (const auto& t : inst.terms) {
      int prod = 1;
      for (int i : t.vars) prod &= x.x[static_cast<size_t>(i - 1)];
      if (prod) val += t.coef;
    }
    if (first || val > best.value) {  // choices are in lexicographic order
      best.value = val;
      best.argmax = x;
      first = false;
    }
  }
  return best;
}

}  // namespace mcpp
