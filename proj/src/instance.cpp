#include "mcpp/instance.hpp"

#include <algorithm>
#include <set>

namespace mcpp {

int Partition::block_of(int i) const {
  for (int b = 0; b < num_blocks(); ++b)
    if (std::binary_search(blocks[static_cast<size_t>(b)].begin(),
                           blocks[static_cast<size_t>(b)].end(), i))
      return b;
  return -1;
}

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  const Partition& p = inst.partition;
  if (p.n < 0) out.push_back({"bad-index", "n must be nonnegative"});

  std::set<int> seen;
  for (int b = 0; b < p.num_blocks(); ++b) {
    const auto& blk = p.block(b);
    if (blk.empty()) {
      out.push_back({"empty-block", "block " + std::to_string(b) + " is empty"});
      continue;
    }
    if (blk.size() < 2)
      out.push_back({"singleton-block",
                     "block " + std::to_string(b) + " has a single choice; every decision needs at least two"});
    for (int i : blk) {
      if (i < 1 || i > p.n) {
        out.push_back({"bad-index", "variable " + std::to_string(i) + " outside 1.." + std::to_string(p.n)});
        continue;
      }
      if (!seen.insert(i).second)
        out.push_back({"overlap-between-blocks", "variable " + std::to_string(i) + " appears in two blocks"});
    }
  }
  if (static_cast<int>(seen.size()) != p.n)
    out.push_back({"block-union-not-n",
                   "blocks cover " + std::to_string(seen.size()) + " of " + std::to_string(p.n) + " variables"});

  const bool partition_ok = out.empty();
  std::set<Mono, MonoLess> term_keys;
  for (const auto& t : inst.terms) {
    Mono key = sorted_mono(t.vars);
    if (key.size() != t.vars.size())
      out.push_back({"duplicate-term", "monomial " + mono_to_string(t.vars) + " repeats a variable"});
    bool indices_ok = true;
    for (int i : key)
      if (i < 1 || i > p.n) {
        out.push_back({"bad-index", "term variable " + std::to_string(i) + " outside 1.." + std::to_string(p.n)});
        indices_ok = false;
      }
    if (indices_ok && partition_ok) {
      // Only meaningful once the partition itself is sound.
      std::set<int> hit;
      for (int i : key) {
        const int b = p.block_of(i);
        if (b >= 0 && !hit.insert(b).second)
          out.push_back({"monomial-hits-block-twice",
                         "monomial " + mono_to_string(key) + " takes two choices from block " + std::to_string(b)});
      }
    }
    if (!term_keys.insert(key).second)
      out.push_back({"duplicate-term", "monomial " + mono_to_string(key) + " appears in two terms"});
  }
  return out;
}

void validate_or_throw(const Instance& inst) {
  auto v = validate(inst);
  if (!v.empty()) throw ValidationError(v.front().kind + ": " + v.front().detail);
}

Instance simplify(const Instance& inst) {
  Instance out;
  out.partition = inst.partition;
  std::map<Mono, Rat, MonoLess> merged;
  for (const auto& t : inst.terms) {
    Mono key = sorted_mono(t.vars);
    bool conflict = false;
    std::set<int> hit;
    for (int i : key) {
      const int b = inst.partition.block_of(i);
      if (b >= 0 && !hit.insert(b).second) conflict = true;
    }
    if (conflict) continue;  // the product vanishes at every feasible point
    merged[key] += t.coef;
  }
  for (auto& [vars, coef] : merged)
    if (coef != 0) out.terms.push_back({vars, coef});
  return out;
}

Mono edge_of(const Mono& vars, const Partition& p) {
  Mono e;
  for (int i : vars) {
    const int b = p.block_of(i);
    if (b < 0) throw ValidationError("variable " + std::to_string(i) + " not covered by any block");
    e.push_back(b);
  }
  Mono sorted = sorted_mono(e);
  if (sorted.size() != e.size())
    throw ValidationError("monomial " + mono_to_string(vars) + " hits a block twice");
  return sorted;
}

Hypergraph induce_hypergraph(const Instance& inst) {
  std::vector<int> verts(static_cast<size_t>(inst.partition.num_blocks()));
  for (int b = 0; b < inst.partition.num_blocks(); ++b) verts[static_cast<size_t>(b)] = b;
  std::set<Mono, MonoLess> edges;
  for (const auto& t : inst.terms) {
    Mono e = edge_of(sorted_mono(t.vars), inst.partition);
    if (e.size() > 1) edges.insert(std::move(e));
  }
  return Hypergraph(std::move(verts), {edges.begin(), edges.end()});
}

namespace {

// All monomials with exactly one variable per listed block.
std::vector<Mono> cartesian_over_blocks(const Partition& p, const Mono& edge_blocks) {
  std::vector<Mono> out{Mono{}};
  for (int b : edge_blocks) {
    std::vector<Mono> next;
    for (const auto& prefix : out)
      for (int i : p.block(b)) {
        Mono m = prefix;
        m.push_back(i);
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  for (auto& m : out) m = sorted_mono(std::move(m));
  std::sort(out.begin(), out.end(), MonoLess{});
  return out;
}

}  // namespace

MonomialFamily::MonomialFamily(Partition partition, Hypergraph hyper)
    : partition_(std::move(partition)), hyper_(std::move(hyper)) {
  std::set<Mono, MonoLess> labels;
  for (int b = 0; b < partition_.num_blocks(); ++b)
    for (int i : partition_.block(b)) labels.insert(Mono{i});
  for (const auto& e : hyper_.edges)
    for (auto& m : cartesian_over_blocks(partition_, e)) labels.insert(std::move(m));
  coords_ = make_coords({labels.begin(), labels.end()});

  std::vector<Mono> blk_labels;
  for (int b = 0; b < partition_.num_blocks(); ++b) blk_labels.push_back(Mono{b});
  for (const auto& e : hyper_.edges) blk_labels.push_back(e);
  block_coords_ = make_coords(std::move(blk_labels));
}

std::vector<Mono> MonomialFamily::group(const Mono& edge_blocks) const {
  for (int b : edge_blocks)
    if (!hyper_.has_vertex(b))
      throw ValidationError("group over unknown block " + std::to_string(b));
  return cartesian_over_blocks(partition_, edge_blocks);
}

ClosedObjective close_family(const Instance& inst) {
  return close_family(inst, induce_hypergraph(inst));
}

ClosedObjective close_family(const Instance& inst, const Hypergraph& h) {
  if (!induce_hypergraph(inst).is_subhypergraph_of(h))
    throw ValidationError("hypergraph does not cover the instance's monomials");
  MonomialFamily fam(inst.partition, h);
  std::vector<Rat> coef(fam.size(), Rat(0));
  Rat offset = 0;
  for (const auto& t : inst.terms) {
    Mono key = sorted_mono(t.vars);
    if (key.empty()) {
      offset += t.coef;
      continue;
    }
    coef[static_cast<size_t>(fam.coords()->index_of(key))] += t.coef;
  }
  return ClosedObjective{std::move(fam), std::move(coef), std::move(offset)};
}

}  // namespace mcpp
