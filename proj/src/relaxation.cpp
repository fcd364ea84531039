#include "mcpp/relaxation.hpp"

#include "mcpp/oracle.hpp"
#include "mcpp/simplex.hpp"

#include <algorithm>
#include <set>

namespace mcpp {

std::string to_string(RowTag t) {
  switch (t) {
    case RowTag::none: return "none";
    case RowTag::multiple_choice: return "multiple-choice";
    case RowTag::vertex_edge: return "vertex-edge";
    case RowTag::tree_intersection: return "tree-intersection";
    case RowTag::pair_intersection: return "pair-intersection";
    case RowTag::nonnegativity: return "nonnegativity";
    case RowTag::affine_hull: return "affine-hull";
  }
  return "?";
}

void LinearSystem::dedup() {
  std::set<std::tuple<int, std::vector<Rat>, Rat>> seen;
  std::vector<Row> kept;
  for (auto& r : rows)
    if (seen.emplace(static_cast<int>(r.kind), r.a.v, r.rhs).second) kept.push_back(std::move(r));
  rows = std::move(kept);
}

namespace {

bool mono_contains(const Mono& big, const Mono& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void add_choice_rows(RelaxationSystem& sys, const MonomialFamily& fam, RowTag tag) {
  for (int b = 0; b < fam.partition().num_blocks(); ++b) {
    RVector a(fam.coords());
    for (int i : fam.partition().block(b)) a.at({i}) = 1;
    sys.add_equality(std::move(a), Rat(1), tag);
  }
}

void add_vertex_edge_rows(RelaxationSystem& sys, const MonomialFamily& fam) {
  for (const auto& e : fam.hypergraph().edges) {
    const auto group = fam.group(e);
    for (int b : e)
      for (int i : fam.partition().block(b)) {
        RVector a(fam.coords());
        a.at({i}) = 1;
        for (const auto& j : group)
          if (std::binary_search(j.begin(), j.end(), i)) a.at(j) -= 1;
        sys.add_equality(std::move(a), Rat(0), RowTag::vertex_edge);
      }
  }
}

// Matching rows between the monomial groups of e and e' on their shared
// blocks: the marginal over the shared-block choices must agree.
void add_intersection_rows(RelaxationSystem& sys, const MonomialFamily& fam, const Mono& e,
                           const Mono& eprime, RowTag tag) {
  Mono shared;
  std::set_intersection(e.begin(), e.end(), eprime.begin(), eprime.end(),
                        std::back_inserter(shared));
  if (shared.size() < 2) return;
  const auto ge = fam.group(e);
  const auto gp = fam.group(eprime);
  for (const auto& j0 : fam.group(shared)) {
    RVector a(fam.coords());
    for (const auto& j : ge)
      if (mono_contains(j, j0)) a.at(j) += 1;
    for (const auto& j : gp)
      if (mono_contains(j, j0)) a.at(j) -= 1;
    sys.add_equality(std::move(a), Rat(0), tag);
  }
}

}  // namespace

RelaxationSystem jointree_relaxation(const MonomialFamily& fam, const JoinTree& t) {
  if (!is_valid_join_tree(fam.hypergraph(), t))
    throw ValidationError("jointree_relaxation: not a valid join tree of the hypergraph");
  RelaxationSystem sys(fam.coords());
  add_choice_rows(sys, fam, RowTag::multiple_choice);
  add_vertex_edge_rows(sys, fam);
  for (auto [p, q] : t.tree_edges)
    add_intersection_rows(sys, fam, t.nodes[static_cast<size_t>(p)],
                          t.nodes[static_cast<size_t>(q)], RowTag::tree_intersection);
  sys.add_nonnegativity();
  return sys;
}

RelaxationSystem jointree_relaxation(const MonomialFamily& fam) {
  return jointree_relaxation(fam, build_join_tree(fam.hypergraph()));
}

RelaxationSystem pairwise_relaxation(const MonomialFamily& fam) {
  RelaxationSystem sys(fam.coords());
  add_choice_rows(sys, fam, RowTag::multiple_choice);
  add_vertex_edge_rows(sys, fam);
  const auto& edges = fam.hypergraph().edges;
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      add_intersection_rows(sys, fam, edges[i], edges[j], RowTag::pair_intersection);
  sys.add_nonnegativity();
  return sys;
}

RelaxationSystem affine_hull_system(const MonomialFamily& fam, const Mono& d, AffineHullForm form) {
  if (!is_downward_closed(fam.hypergraph()))
    throw ValidationError("affine hull system requires a downward-closed hypergraph");
  RelaxationSystem sys(fam.coords());
  const Partition& p = fam.partition();

  if (form == AffineHullForm::transversal) {
    if (!is_transversal(d, p))
      throw ValidationError("distinguished set " + mono_to_string(d) + " is not a transversal");
    // One defining equality per monomial touching the transversal: the
    // monomial equals the linearized product of its per-block expressions,
    // distinguished choices rewritten as one minus the rest of the block.
    for (const auto& j : fam.coords()->labels()) {
      MultilinearPoly prod = MultilinearPoly::constant(Rat(1));
      bool touches = false;
      for (int i : j) {
        if (std::binary_search(d.begin(), d.end(), i)) {
          touches = true;
          MultilinearPoly factor = MultilinearPoly::constant(Rat(1));
          for (int other : p.block(p.block_of(i)))
            if (other != i) factor = factor - MultilinearPoly::variable(other);
          prod = mul(prod, factor, &p, ConflictPolicy::strict);
        } else {
          prod = mul(prod, MultilinearPoly::variable(i), &p, ConflictPolicy::strict);
        }
      }
      if (!touches) continue;
      const LinearForm rhs = linearize(prod, fam.coords());
      RVector a(fam.coords());
      a.at(j) = 1;
      for (size_t k = 0; k < a.size(); ++k) a.v[k] -= rhs.a.v[k];
      sys.add_equality(std::move(a), rhs.offset, RowTag::affine_hull);
    }
    return sys;
  }

  // Symmetric form: choice rows plus, for every group nested one block deep
  // inside an edge's group, marginalization consistency.
  add_choice_rows(sys, fam, RowTag::affine_hull);
  for (const auto& eprime : fam.hypergraph().edges) {
    const auto gp = fam.group(eprime);
    for (size_t skip = 0; skip < eprime.size(); ++skip) {
      Mono e;
      for (size_t k = 0; k < eprime.size(); ++k)
        if (k != skip) e.push_back(eprime[k]);
      if (e.size() > 1 && !fam.hypergraph().has_edge(e)) continue;  // unreachable when closed
      for (const auto& j : fam.group(e)) {
        RVector a(fam.coords());
        a.at(j) = 1;
        for (const auto& jp : gp)
          if (mono_contains(jp, j) && jp != j) a.at(jp) -= 1;
        sys.add_equality(std::move(a), Rat(0), RowTag::affine_hull);
      }
    }
  }
  return sys;
}

namespace {

std::vector<std::vector<Rat>> augmented_equalities(const LinearSystem& s) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : s.rows) {
    if (r.kind != RowKind::equality)
      throw ValidationError("subspace comparison expects equality-only systems");
    std::vector<Rat> row = r.a.v;
    row.push_back(r.rhs);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool same_affine_subspace(const LinearSystem& a, const LinearSystem& b) {
  if (!(*a.coords == *b.coords)) throw ValidationError("subspace comparison: label mismatch");
  auto ra = augmented_equalities(a);
  auto rb = augmented_equalities(b);
  const int rank_a = rank(ra);
  const int rank_b = rank(rb);
  std::vector<std::vector<Rat>> stacked = ra;
  stacked.insert(stacked.end(), rb.begin(), rb.end());
  const int rank_ab = rank(stacked);
  return rank_a == rank_ab && rank_b == rank_ab;
}

bool check_pairwise_equals_jointree(const MonomialFamily& fam, const JoinTree& t) {
  const RelaxationSystem tree = jointree_relaxation(fam, t);
  const RelaxationSystem pair = pairwise_relaxation(fam);

  std::set<std::pair<std::vector<Rat>, Rat>> tree_rows;
  for (const auto& r : tree.rows)
    if (r.kind == RowKind::equality) tree_rows.emplace(r.a.v, r.rhs);

  for (const auto& r : pair.rows) {
    if (r.kind != RowKind::equality) continue;
    if (tree_rows.count({r.a.v, r.rhs})) continue;
    // The row is extra; it must be implied: its value range over the tree
    // system must be exactly {rhs}.
    RVector obj = r.a;
    const LpResult hi = lp_maximize(tree, obj);
    for (auto& c : obj.v) c = -c;
    const LpResult lo = lp_maximize(tree, obj);
    if (hi.status != LpStatus::optimal || lo.status != LpStatus::optimal) return false;
    if (hi.value != r.rhs || -lo.value != r.rhs) return false;
  }
  return true;
}

}  // namespace mcpp
