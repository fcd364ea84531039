#include "mcpp/lifting.hpp"

#include "mcpp/oracle.hpp"

#include <algorithm>
#include <set>

namespace mcpp {

bool Selection::valid_for(const Partition& p) const {
  if (static_cast<int>(chosen.size()) != p.num_blocks()) return false;
  for (int b = 0; b < p.num_blocks(); ++b) {
    const Mono& s = chosen[static_cast<size_t>(b)];
    if (s.empty() || s.size() >= p.block(b).size()) return false;
    for (int i : s)
      if (!std::binary_search(p.block(b).begin(), p.block(b).end(), i)) return false;
  }
  return true;
}

std::vector<Selection> enumerate_selections(const Partition& p) {
  // Per-block options: nonempty proper subsets in the global label order.
  std::vector<std::vector<Mono>> options(static_cast<size_t>(p.num_blocks()));
  for (int b = 0; b < p.num_blocks(); ++b) {
    const auto& blk = p.block(b);
    std::vector<Mono> subs;
    for (size_t mask = 1; mask + 1 < (size_t{1} << blk.size()); ++mask) {
      Mono s;
      for (size_t k = 0; k < blk.size(); ++k)
        if (mask & (size_t{1} << k)) s.push_back(blk[k]);
      subs.push_back(std::move(s));
    }
    std::sort(subs.begin(), subs.end(), MonoLess{});
    options[static_cast<size_t>(b)] = std::move(subs);
  }
  std::vector<Selection> out;
  Selection cur;
  cur.chosen.resize(static_cast<size_t>(p.num_blocks()));
  auto rec = [&](auto&& self, size_t b) -> void {
    if (b == options.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : options[b]) {
      cur.chosen[b] = s;
      self(self, b + 1);
    }
  };
  rec(rec, 0);
  return out;
}

ForcingBlocks classify_forcing_blocks(const BlockInequality& ineq, const PointSet& block_vertices) {
  if (!(*ineq.c.coords == *block_vertices.coords))
    throw ValidationError("inequality labels do not match vertex labels");
  for (const auto& z : block_vertices.points)
    if (ineq.c.dot(z) > ineq.delta)
      throw ValidationError("classify_forcing_blocks: inequality is not valid");

  ForcingBlocks cls;
  std::vector<int> blocks;
  for (const auto& label : block_vertices.coords->labels())
    if (label.size() == 1) blocks.push_back(label[0]);

  for (int b : blocks) {
    const int idx = block_vertices.coords->index_of({b});
    bool zero_forces = true, one_forces = true;
    for (const auto& z : block_vertices.points) {
      const bool tight = (ineq.c.dot(z) == ineq.delta);
      if (z[static_cast<size_t>(idx)] == 0 && !tight) zero_forces = false;
      if (z[static_cast<size_t>(idx)] == 1 && !tight) one_forces = false;
    }
    if (zero_forces) cls.zero_forcing.push_back(b);
    if (one_forces) cls.one_forcing.push_back(b);
    if (zero_forces && one_forces) cls.degenerate = true;
  }
  return cls;
}

LiftedInequality lift_inequality(const BlockInequality& ineq, const Selection& sel,
                                 const MonomialFamily& fam) {
  if (!sel.valid_for(fam.partition()))
    throw ValidationError("selection is not a nonempty proper subset per block");
  if (!(*ineq.c.coords == *fam.block_coords()))
    throw ValidationError("inequality labels do not match the block space");

  const Partition& p = fam.partition();
  MultilinearPoly total;
  const auto& labels = ineq.c.coords->labels();
  for (size_t j = 0; j < labels.size(); ++j) {
    if (ineq.c.v[j] == 0) continue;
    MultilinearPoly prod = MultilinearPoly::constant(Rat(1));
    for (int b : labels[j]) {
      MultilinearPoly factor;
      for (int i : sel.chosen[static_cast<size_t>(b)])
        factor = factor + MultilinearPoly::variable(i);
      prod = mul(prod, factor, &p, ConflictPolicy::strict);
    }
    total = total + prod * ineq.c.v[j];
  }
  const LinearForm form = linearize(total, fam.coords());
  if (form.offset != 0) throw InvariantViolation("lifted inequality grew a constant term");
  return LiftedInequality{form.a, ineq.delta};
}

bool check_selection_condition(const Selection& sel, const ForcingBlocks& cls, const Partition& p) {
  for (int b : cls.zero_forcing)
    if (sel.chosen[static_cast<size_t>(b)].size() != 1) return false;
  for (int b : cls.one_forcing)
    if (sel.chosen[static_cast<size_t>(b)].size() != p.block(b).size() - 1) return false;
  return true;
}

BlockInequality flip_block(const BlockInequality& ineq, int block, const MonomialFamily& fam) {
  if (!(*ineq.c.coords == *fam.block_coords()))
    throw ValidationError("inequality labels do not match the block space");
  MultilinearPoly total;
  const auto& labels = ineq.c.coords->labels();
  for (size_t j = 0; j < labels.size(); ++j) {
    if (ineq.c.v[j] == 0) continue;
    const Mono& e = labels[j];
    if (!std::binary_search(e.begin(), e.end(), block)) {
      total.add_term(e, ineq.c.v[j]);
      continue;
    }
    // (1 - z_b) times the rest of the edge.
    Mono rest;
    for (int b : e)
      if (b != block) rest.push_back(b);
    total.add_term(rest, ineq.c.v[j]);
    total.add_term(e, -ineq.c.v[j]);
  }
  const LinearForm form = linearize(total, fam.block_coords());
  return BlockInequality{form.a, ineq.delta - form.offset};
}

std::vector<Rat> reduce_point(const std::vector<Rat>& w, const MonomialFamily& fam, const Mono& d) {
  const CoordsPtr red = reduced_coords(fam, d);
  std::vector<Rat> v;
  v.reserve(red->size());
  for (const auto& label : red->labels())
    v.push_back(w[static_cast<size_t>(fam.coords()->index_of(label))]);
  return v;
}

std::vector<Rat> expand_point(const std::vector<Rat>& v, const MonomialFamily& fam, const Mono& d) {
  if (!is_downward_closed(fam.hypergraph()))
    throw ValidationError("expansion requires a downward-closed hypergraph");
  const CoordsPtr red = reduced_coords(fam, d);
  if (v.size() != red->size()) throw ValidationError("reduced point has the wrong length");
  const Partition& p = fam.partition();

  std::vector<Rat> w(fam.size(), Rat(0));
  for (size_t j = 0; j < red->size(); ++j)
    w[static_cast<size_t>(fam.coords()->index_of(red->label(static_cast<int>(j))))] = v[j];

  for (const auto& label : fam.coords()->labels()) {
    bool touches = false;
    for (int i : label)
      if (std::binary_search(d.begin(), d.end(), i)) touches = true;
    if (!touches) continue;
    // The distinguished choice of a block is one minus the others, so the
    // monomial expands into a linear expression over the reduced labels.
    MultilinearPoly prod = MultilinearPoly::constant(Rat(1));
    for (int i : label) {
      if (std::binary_search(d.begin(), d.end(), i)) {
        MultilinearPoly factor = MultilinearPoly::constant(Rat(1));
        for (int other : p.block(p.block_of(i)))
          if (other != i) factor = factor - MultilinearPoly::variable(other);
        prod = mul(prod, factor, &p, ConflictPolicy::strict);
      } else {
        prod = mul(prod, MultilinearPoly::variable(i), &p, ConflictPolicy::strict);
      }
    }
    const LinearForm form = linearize(prod, fam.coords());
    w[static_cast<size_t>(fam.coords()->index_of(label))] = form.offset + form.a.dot(w);
  }
  return w;
}

LiftSweepReport sweep_lift_selections(const BlockInequality& ineq, const MonomialFamily& fam,
                                    const PointSet& block_vertices,
                                    const PointSet& profile_vertices) {
  if (!is_downward_closed(fam.hypergraph()))
    throw ValidationError("the lift equivalence requires a downward-closed hypergraph");
  const IneqCertificate base = certify_inequality(ineq.c, ineq.delta, block_vertices);
  if (!base.is_facet())
    throw ValidationError("inequality is not facet-inducing for the block-space polytope");
  const ForcingBlocks cls = classify_forcing_blocks(ineq, block_vertices);

  LiftSweepReport report;
  for (const auto& sel : enumerate_selections(fam.partition())) {
    LiftSweepEntry entry;
    entry.selection = sel;
    entry.condition = check_selection_condition(sel, cls, fam.partition());
    const LiftedInequality lifted = lift_inequality(ineq, sel, fam);
    entry.certified_facet =
        certify_inequality(lifted.a, lifted.delta, profile_vertices).is_facet();
    if (entry.condition != entry.certified_facet) ++report.disagreements;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<BlockInequality> block_inequality_catalog(const MonomialFamily& fam) {
  const CoordsPtr coords = fam.block_coords();
  std::vector<BlockInequality> out;
  auto push = [&](RVector c, Rat delta) { out.push_back({std::move(c), std::move(delta)}); };
  for (const auto& e : fam.hypergraph().edges) {
    {
      RVector c(coords);
      c.at(e) = -1;
      push(std::move(c), Rat(0));
    }
    for (int b : e) {
      RVector c(coords);
      c.at(e) = 1;
      c.at({b}) = -1;
      push(std::move(c), Rat(0));
    }
    {
      RVector c(coords);
      for (int b : e) c.at({b}) = 1;
      c.at(e) = -1;
      push(std::move(c), Rat(static_cast<int>(e.size()) - 1));
    }
  }
  for (const auto& label : coords->labels()) {
    if (label.size() != 1) continue;
    RVector up(coords), down(coords);
    up.at(label) = 1;
    down.at(label) = -1;
    push(std::move(up), Rat(1));
    push(std::move(down), Rat(0));
  }
  return out;
}

BlockInequality cycle_inequality(const MonomialFamily& fam, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw ValidationError("cycle needs at least three blocks");
  const CoordsPtr coords = fam.block_coords();
  RVector c(coords);
  const size_t m = cycle.size();
  c.at(sorted_mono({cycle[0], cycle[m - 1]})) -= 1;
  for (size_t p = 0; p + 1 < m; ++p) c.at(sorted_mono({cycle[p], cycle[p + 1]})) += 1;
  for (size_t p = 1; p + 1 < m; ++p) c.at({cycle[p]}) -= 1;
  return BlockInequality{std::move(c), Rat(0)};
}

ProjectionCheck check_face_projection(const IneqCertificate& facet_cert, const ForcingBlocks& cls,
                                      const std::vector<int>& u, const MonomialFamily& fam) {
  if (u.empty()) throw ValidationError("the zero-fixed block set must be nonempty");
  for (int b : u)
    if (std::binary_search(cls.one_forcing.begin(), cls.one_forcing.end(), b))
      throw ValidationError("the zero-fixed set must avoid the one-forcing blocks");
  const Mono us = sorted_mono(Mono(u.begin(), u.end()));
  const Hypergraph& h = fam.hypergraph();

  // Labels disjoint from u whose union with u is again a block or an edge.
  auto extends = [&](const Mono& e) {
    Mono merged = e;
    merged.insert(merged.end(), us.begin(), us.end());
    merged = sorted_mono(std::move(merged));
    if (merged.size() != e.size() + us.size()) return false;  // not disjoint
    return merged.size() == 1 || h.has_edge(merged);
  };

  std::vector<Mono> compatible;  // nonempty members only; {} handled by `extends({})`
  for (const auto& label : fam.block_coords()->labels())
    if (extends(label)) compatible.push_back(label);
  const bool empty_extends = (us.size() == 1) || h.has_edge(us);

  ProjectionCheck out;
  if (compatible.empty() && !empty_extends) return out;  // nothing to project
  out.expected_dim = compatible.size();
  if (compatible.empty()) return out;  // projection space is zero-dimensional
  out.applicable = true;

  const CoordsPtr proj_coords = make_coords(compatible);
  std::set<std::vector<Rat>> projected;
  for (const auto& z : facet_cert.tight_points.points) {
    bool zero_on_u = true;
    for (int b : us)
      if (z[static_cast<size_t>(facet_cert.tight_points.coords->index_of({b}))] != 0)
        zero_on_u = false;
    if (!zero_on_u) continue;
    std::vector<Rat> q;
    q.reserve(compatible.size());
    for (const auto& label : proj_coords->labels())
      q.push_back(z[static_cast<size_t>(facet_cert.tight_points.coords->index_of(label))]);
    projected.insert(std::move(q));
  }
  if (projected.empty()) return out;  // full_rank stays false
  PointSet pts(proj_coords, {projected.begin(), projected.end()});
  out.full_rank = (affine_rank(pts) == static_cast<int>(out.expected_dim));
  return out;
}

}  // namespace mcpp
