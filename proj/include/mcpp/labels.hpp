#pragma once

#include "mcpp/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

namespace mcpp {

// A coordinate label: a sorted set of integer indices. Depending on the
// space it lives in, the indices are ground-set variables (monomials) or
// block ids (hyperedges / block singletons). Empty = the constant slot.
using Mono = std::vector<int>;

inline Mono make_mono(std::initializer_list<int> xs) {
  Mono m(xs);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

inline Mono sorted_mono(Mono m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

// Global canonical order: graded by cardinality, then lexicographic.
// All vertex lists and coordinate layouts follow it, so outputs are
// reproducible across runs.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline std::string mono_to_string(const Mono& m) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << m[i];
  }
  os << '}';
  return os.str();
}

// An ordered, duplicate-free coordinate label set shared by vectors,
// matrices and linear systems of one space.
class Coords {
 public:
  explicit Coords(std::vector<Mono> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end(), MonoLess{});
    for (size_t i = 0; i < labels_.size(); ++i) {
      auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
      if (!fresh) throw ValidationError("duplicate coordinate label " + mono_to_string(labels_[i]));
    }
  }

  size_t size() const { return labels_.size(); }
  const std::vector<Mono>& labels() const { return labels_; }
  const Mono& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  bool contains(const Mono& m) const { return index_.count(m) > 0; }
  int index_of(const Mono& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
      throw ValidationError("label " + mono_to_string(m) + " not in coordinate set");
    return it->second;
  }

  bool operator==(const Coords& o) const { return labels_ == o.labels_; }

 private:
  std::vector<Mono> labels_;
  std::map<Mono, int, MonoLess> index_;
};

using CoordsPtr = std::shared_ptr<const Coords>;

inline CoordsPtr make_coords(std::vector<Mono> labels) {
  return std::make_shared<const Coords>(std::move(labels));
}

}  // namespace mcpp
