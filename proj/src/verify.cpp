#include "mcpp/verify.hpp"

#include "mcpp/battery.hpp"
#include "mcpp/lifting.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/polytope.hpp"
#include "mcpp/relaxation.hpp"
#include "mcpp/solver.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mcpp {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

MonomialFamily family_of(const Instance& inst) { return close_family(inst).family; }

bool is_integral(const std::vector<Rat>& p) {
  for (const auto& v : p)
    if (!is_zero_one(v)) return false;
  return true;
}

Mono first_transversal(const Partition& p) {
  Mono d;
  for (const auto& blk : p.blocks) d.push_back(blk.front());
  return sorted_mono(std::move(d));
}

// 1. Exact equality of the join-tree H-representation and the profile hull
// on every acyclic battery instance.
CriterionResult criterion_equality() {
  Check c;
  size_t count = 0;
  for (const auto& item : acyclic_battery()) {
    const ClosedObjective closed = close_family(item.instance);
    const PointSet profiles = enumerate_profiles(closed.family);
    const RelaxationSystem sys = jointree_relaxation(closed.family);
    const PolytopeComparison cmp =
        equal_polytopes(sys, profiles, static_cast<int>(item.vertex_guard));
    c.require(cmp.equal, item.name + ": " + cmp.reason);
    ++count;
  }
  c.require(count >= 8, "battery smaller than required");
  if (c.ok) c.detail = std::to_string(count) + " instances matched exactly";
  return {1, "jointree H-rep equals profile hull on acyclic battery", c.ok, c.detail};
}

// 2. The triangle witness: the pairwise relaxation has a fractional vertex
// and overshoots the true optimum (3 versus 2) on the disagreement
// objective.
CriterionResult criterion_triangle() {
  Check c;
  const Instance tri = triangle_disagreement();
  const ClosedObjective closed = close_family(tri);
  const PointSet profiles = enumerate_profiles(closed.family);
  const RelaxationSystem cap = pairwise_relaxation(closed.family);

  const PointSet verts = enumerate_vertices(cap, 24);
  bool fractional_outside = false;
  for (const auto& v : verts.points)
    if (!is_integral(v) && !member(RVector(closed.family.coords(), v), profiles).inside)
      fractional_outside = true;
  c.require(fractional_outside, "no fractional vertex outside the hull");

  const LpResult lp = lp_maximize(cap, RVector(closed.family.coords(), closed.coefficients));
  c.require(lp.status == LpStatus::optimal && lp.value == 3, "relaxation value is not 3");
  const BruteResult brute = brute_force_optimum(tri);
  c.require(brute.value == 2, "true optimum is not 2");
  if (c.ok) c.detail = "fractional vertex found; relaxation 3 > optimum 2";
  return {2, "pairwise relaxation fails on the block triangle", c.ok, c.detail};
}

// 3. LP route equals brute force on seeded random objectives, with integral
// LP vertices throughout (integrality is enforced inside solve()).
CriterionResult criterion_solver(unsigned seed, int objectives) {
  Check c;
  const auto battery = acyclic_battery();
  for (size_t idx = 0; idx < battery.size() && c.ok; ++idx) {
    const auto& item = battery[idx];
    const MonomialFamily fam = family_of(item.instance);
    std::mt19937_64 rng(seed + idx);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 4);
    for (int k = 0; k < objectives && c.ok; ++k) {
      Instance randomized;
      randomized.partition = item.instance.partition;
      for (const auto& label : fam.coords()->labels())
        randomized.terms.push_back({label, Rat(num(rng)) / den(rng)});
      // Keep every hyperedge alive: a subhypergraph of an acyclic
      // hypergraph need not stay acyclic, so pin one monomial per edge.
      for (const auto& e : fam.hypergraph().edges) {
        bool alive = false;
        for (auto& t : randomized.terms)
          if (t.coef != 0 && edge_of(t.vars, randomized.partition) == e) alive = true;
        if (!alive)
          for (auto& t : randomized.terms)
            if (edge_of(t.vars, randomized.partition) == e) {
              t.coef = 1;
              break;
            }
      }
      SolveReport lp;
      try {
        lp = solve(randomized, SolveMethod::lp);
      } catch (const std::exception& e) {
        c.fail(item.name + ": " + e.what());
        break;
      }
      const BruteResult brute = brute_force_optimum(randomized);
      c.require(lp.optimum == brute.value,
                item.name + " objective " + std::to_string(k) + ": optima differ");
    }
  }
  if (c.ok)
    c.detail = std::to_string(objectives) + " objectives per instance, all equal and integral";
  return {3, "LP route matches brute force on random objectives", c.ok, c.detail};
}

// 4. The pairwise system adds nothing over the join-tree system, for every
// valid join tree (at least two where they exist).
CriterionResult criterion_jointree_independence() {
  Check c;
  size_t multi_tree_instances = 0;
  for (const auto& item : acyclic_battery()) {
    const MonomialFamily fam = family_of(item.instance);
    std::vector<JoinTree> trees;
    if (fam.hypergraph().edges.size() <= 1)
      trees.push_back(build_join_tree(fam.hypergraph()));
    else
      trees = enumerate_join_trees(fam.hypergraph());
    if (trees.size() > 2) trees.resize(2);
    if (trees.size() == 2) ++multi_tree_instances;
    for (const auto& t : trees)
      c.require(check_pairwise_equals_jointree(fam, t),
                item.name + ": pairwise system cuts beyond a join-tree system");
  }
  c.require(multi_tree_instances >= 1, "no instance offered two join trees");
  if (c.ok) c.detail = "all equality gaps are identically zero";
  return {4, "pairwise system equals every join-tree system", c.ok, c.detail};
}

// 5. Reduced-space toolkit: full dimension of the reduced hull, exact
// round-trip of the expansion, and agreement of both affine-hull forms.
CriterionResult criterion_reduced_space() {
  Check c;
  for (const auto& item : acyclic_battery()) {
    const MonomialFamily fam = family_of(item.instance);
    if (!is_downward_closed(fam.hypergraph())) continue;
    const PointSet profiles = enumerate_profiles(fam);
    for (const Mono& d :
         {default_transversal(fam.partition()), first_transversal(fam.partition())}) {
      const CoordsPtr red = reduced_coords(fam, d);
      const PointSet reduced = enumerate_reduced_profiles(fam, d);
      c.require(affine_rank(reduced) == static_cast<int>(red->size()),
                item.name + ": reduced hull is not full-dimensional");
      for (const auto& w : profiles.points)
        c.require(expand_point(reduce_point(w, fam, d), fam, d) == w,
                  item.name + ": reduce/expand round trip failed");
      const RelaxationSystem tform = affine_hull_system(fam, d, AffineHullForm::transversal);
      const RelaxationSystem sform = affine_hull_system(fam, d, AffineHullForm::symmetric);
      std::vector<std::vector<Rat>> aug;
      for (const auto& r : tform.rows) {
        auto row = r.a.v;
        row.push_back(r.rhs);
        aug.push_back(std::move(row));
      }
      c.require(rank(aug) == static_cast<int>(fam.size() - red->size()),
                item.name + ": affine hull rank mismatch");
      for (const auto& w : profiles.points)
        c.require(tform.satisfies(w) && sform.satisfies(w),
                  item.name + ": a profile violates the affine hull system");
      c.require(same_affine_subspace(tform, sform),
                item.name + ": the two affine hull forms disagree");
    }
  }
  if (c.ok) c.detail = "all downward-closed instances, two transversals each";
  return {5, "reduced-space bijection and affine hull forms", c.ok, c.detail};
}

// 6. Lifting equivalence, both directions, for every certified facet and
// every selection.
CriterionResult criterion_lifting() {
  Check c;
  std::vector<NamedInstance> cases;
  for (const auto& item : acyclic_battery())
    if (item.name == "pair22" || item.name == "pair32" || item.name == "pair33")
      cases.push_back(item);
  cases.push_back(four_cycle_instance());

  size_t facets = 0;
  for (const auto& item : cases) {
    const MonomialFamily fam = family_of(item.instance);
    const PointSet zverts = enumerate_multilinear_vertices(fam);
    const PointSet profiles = enumerate_profiles(fam);
    std::vector<BlockInequality> catalog = block_inequality_catalog(fam);
    if (item.name == "four-cycle") {
      const BlockInequality cyc = cycle_inequality(fam, {0, 1, 2, 3});
      const ForcingBlocks cls = classify_forcing_blocks(cyc, zverts);
      c.require(cls.zero_forcing.empty() && cls.one_forcing.empty(),
                "cycle inequality should force nothing");
      catalog.push_back(cyc);
    }
    for (const auto& ineq : catalog) {
      if (!certify_inequality(ineq.c, ineq.delta, zverts).is_facet()) continue;
      ++facets;
      const LiftSweepReport report = sweep_lift_selections(ineq, fam, zverts, profiles);
      c.require(report.disagreements == 0,
                item.name + ": condition and certification disagree on a selection");
    }
  }
  c.require(facets > 0, "catalog produced no certified facets");
  if (c.ok) c.detail = std::to_string(facets) + " facets swept with zero disagreements";
  return {6, "selection condition matches facet certification", c.ok, c.detail};
}

// 7. Decomposition: the three good splits verify; the triangle split fails
// the precondition and its intersection admits a fractional point.
CriterionResult criterion_decomposition() {
  Check c;
  for (const auto& d : decomposition_battery()) {
    const MonomialFamily fam = family_of(d.instance);
    c.require(check_decomposition_precondition(d.split, fam.hypergraph()) == d.precondition,
              d.name + ": unexpected precondition verdict");
    const DecompositionCheck res = verify_decomposition(d.split, fam);
    c.require(res.ok, d.name + ": " + res.detail);
  }
  {
    const NamedDecomposition bad = triangle_bad_split();
    const MonomialFamily fam = family_of(bad.instance);
    c.require(!check_decomposition_precondition(bad.split, fam.hypergraph()),
              "triangle split should fail the precondition");
    const LinearSystem inter = intersection_system(bad.split, fam);
    const PointSet verts = enumerate_vertices(inter, 24);
    bool fractional = false;
    for (const auto& v : verts.points)
      if (!is_integral(v)) fractional = true;
    c.require(fractional, "triangle intersection admits no fractional vertex");
  }
  if (c.ok) c.detail = "good splits verified; bad split rejected with witness";
  return {7, "decomposition splits verify; bad split rejected", c.ok, c.detail};
}

// 8. Full-rank projection of zero-fixed facet faces.
CriterionResult criterion_face_projection() {
  Check c;
  std::vector<NamedInstance> cases;
  for (const auto& item : acyclic_battery())
    if (item.name == "pair32") cases.push_back(item);
  cases.push_back(four_cycle_instance());

  size_t applicable = 0;
  for (const auto& item : cases) {
    const MonomialFamily fam = family_of(item.instance);
    const PointSet zverts = enumerate_multilinear_vertices(fam);
    std::vector<BlockInequality> catalog = block_inequality_catalog(fam);
    if (item.name == "four-cycle") catalog.push_back(cycle_inequality(fam, {0, 1, 2, 3}));
    for (const auto& ineq : catalog) {
      const IneqCertificate cert = certify_inequality(ineq.c, ineq.delta, zverts);
      if (!cert.is_facet()) continue;
      const ForcingBlocks cls = classify_forcing_blocks(ineq, zverts);
      // All nonempty block subsets avoiding the one-forcing class.
      std::vector<int> free_blocks;
      for (int b = 0; b < fam.partition().num_blocks(); ++b)
        if (!std::binary_search(cls.one_forcing.begin(), cls.one_forcing.end(), b))
          free_blocks.push_back(b);
      for (size_t mask = 1; mask < (size_t{1} << free_blocks.size()); ++mask) {
        std::vector<int> u;
        for (size_t k = 0; k < free_blocks.size(); ++k)
          if (mask & (size_t{1} << k)) u.push_back(free_blocks[k]);
        const ProjectionCheck pc = check_face_projection(cert, cls, u, fam);
        if (!pc.applicable) continue;
        ++applicable;
        c.require(pc.full_rank, item.name + ": projected face lost rank");
      }
    }
  }
  c.require(applicable > 0, "no applicable projection cases");
  if (c.ok) c.detail = std::to_string(applicable) + " projections all full-rank";
  return {8, "zero-fixed facet faces project with full rank", c.ok, c.detail};
}

// 9. The small-invariant pack.
CriterionResult criterion_invariants() {
  Check c;
  for (const auto& item : acyclic_battery()) {
    const MonomialFamily fam = family_of(item.instance);
    const Partition& p = fam.partition();
    c.require(fam.size() == item.family_size, item.name + ": family size drifted");

    // Swap-closure: replacing one choice by another from the same block
    // stays inside the family.
    for (const auto& j : fam.coords()->labels())
      for (int i : j)
        for (int alt : p.block(p.block_of(i))) {
          Mono swapped;
          for (int x : j) swapped.push_back(x == i ? alt : x);
          c.require(fam.contains(sorted_mono(std::move(swapped))),
                    item.name + ": family is not swap-closed");
        }
    // Group sizes are products of block sizes.
    for (const auto& e : fam.hypergraph().edges) {
      size_t expect = 1;
      for (int b : e) expect *= p.block(b).size();
      c.require(fam.group(e).size() == expect, item.name + ": group size mismatch");
    }
    // The profile map is injective and covers the expected count.
    const auto choices = enumerate_choices(p);
    const PointSet profiles = enumerate_profiles(fam);
    c.require(profiles.size() == choices.size(), item.name + ": profile map not injective");
    // Per-edge group mass is one on every profile.
    for (const auto& w : profiles.points)
      for (const auto& e : fam.hypergraph().edges) {
        Rat mass = 0;
        for (const auto& j : fam.group(e))
          mass += w[static_cast<size_t>(fam.coords()->index_of(j))];
        c.require(mass == 1, item.name + ": edge group mass is not one");
      }
  }
  // Flip involution and facet preservation on a downward-closed case.
  {
    const MonomialFamily fam = family_of(acyclic_battery()[0].instance);  // pair22
    const PointSet zverts = enumerate_multilinear_vertices(fam);
    for (const auto& ineq : block_inequality_catalog(fam))
      for (int b = 0; b < fam.partition().num_blocks(); ++b) {
        const BlockInequality once = flip_block(ineq, b, fam);
        const BlockInequality twice = flip_block(once, b, fam);
        c.require(twice.c == ineq.c && twice.delta == ineq.delta, "flip is not an involution");
        c.require(certify_inequality(ineq.c, ineq.delta, zverts).status ==
                      certify_inequality(once.c, once.delta, zverts).status,
                  "flip changed the certificate status");
      }
    // Positive rescaling leaves certificates unchanged.
    for (const auto& ineq : block_inequality_catalog(fam)) {
      const IneqCertificate base = certify_inequality(ineq.c, ineq.delta, zverts);
      RVector scaled = ineq.c;
      for (auto& v : scaled.v) v *= Rat(7, 3);
      const IneqCertificate again = certify_inequality(scaled, ineq.delta * Rat(7, 3), zverts);
      c.require(base.status == again.status &&
                    base.tight_points.size() == again.tight_points.size(),
                "rescaling changed a certificate");
    }
  }
  if (c.ok) c.detail = "swap closure, group counts, profile bijection, flips, rescaling";
  return {9, "structural invariant pack", c.ok, c.detail};
}

}  // namespace

std::vector<CriterionResult> run_verification_suite(unsigned seed, int random_objectives) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_equality());
  out.push_back(criterion_triangle());
  out.push_back(criterion_solver(seed, random_objectives));
  out.push_back(criterion_jointree_independence());
  out.push_back(criterion_reduced_space());
  out.push_back(criterion_lifting());
  out.push_back(criterion_decomposition());
  out.push_back(criterion_face_projection());
  out.push_back(criterion_invariants());
  return out;
}

}  // namespace mcpp
