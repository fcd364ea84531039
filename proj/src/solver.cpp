#include "mcpp/solver.hpp"

#include "mcpp/relaxation.hpp"
#include "mcpp/simplex.hpp"

#include <chrono>

namespace mcpp {

SolveReport solve(const Instance& inst, SolveMethod method, size_t guard) {
  validate_or_throw(inst);
  const auto t0 = std::chrono::steady_clock::now();

  SolveReport report;
  const Hypergraph h = induce_hypergraph(inst);
  report.acyclic = is_alpha_acyclic(h).acyclic;
  report.stats.hypergraph_rank = h.rank();
  for (const auto& blk : inst.partition.blocks)
    report.stats.max_block_size = std::max(report.stats.max_block_size, blk.size());

  const bool use_lp = (method == SolveMethod::lp) ||
                      (method == SolveMethod::automatic && report.acyclic);
  if (use_lp && !report.acyclic)
    throw ValidationError("the LP route requires an alpha-acyclic hypergraph");

  if (use_lp) {
    const ClosedObjective closed = close_family(inst, h);
    report.stats.family_size = closed.family.size();
    const RelaxationSystem sys = jointree_relaxation(closed.family);
    report.stats.equality_rows = sys.count(RowKind::equality);
    report.stats.inequality_rows = sys.count(RowKind::less_equal);

    RVector obj(closed.family.coords(), closed.coefficients);
    // Lexicographic tie-breaking on the reported argmax: every objective
    // value over the 0-1 points is a multiple of 1/D, so a binary-weighted
    // penalty summing to less than 1/(2D) never flips a strict comparison
    // and picks the lexicographically smallest x among the maximizers.
    Int denom_lcm = 1;
    for (const auto& c : closed.coefficients) denom_lcm = lcm(denom_lcm, Int(denominator(c)));
    const Rat eps = Rat(Int(1), denom_lcm * (Int(1) << (inst.partition.n + 1)));
    for (int i = 1; i <= inst.partition.n; ++i)
      obj.at({i}) -= eps * Rat(Int(1) << (inst.partition.n - i));
    const LpResult res = lp_maximize(sys, obj);
    if (res.status != LpStatus::optimal)
      throw InvariantViolation("join-tree LP must be bounded and feasible");
    report.stats.pivots = res.pivots;

    ChoicePoint x;
    x.x.assign(static_cast<size_t>(inst.partition.n), 0);
    for (int i = 1; i <= inst.partition.n; ++i) {
      const Rat& v = res.optimizer[static_cast<size_t>(closed.family.coords()->index_of({i}))];
      if (!is_zero_one(v))
        throw InvariantViolation("join-tree LP returned a fractional vertex on an acyclic instance");
      x.x[static_cast<size_t>(i - 1)] = (v == 1) ? 1 : 0;
    }
    for (const Rat& v : res.optimizer)
      if (!is_zero_one(v))
        throw InvariantViolation("join-tree LP returned a fractional vertex on an acyclic instance");
    // The singleton pattern must itself be feasible and reproduce the value.
    Rat check = 0;
    for (const auto& t : inst.terms) {
      int prod = 1;
      for (int i : t.vars) prod &= x.x[static_cast<size_t>(i - 1)];
      if (prod) check += t.coef;
    }
    Rat penalty = 0;
    for (int i = 1; i <= inst.partition.n; ++i)
      if (x.x[static_cast<size_t>(i - 1)]) penalty += eps * Rat(Int(1) << (inst.partition.n - i));
    if (check != res.value + penalty + closed.offset)
      throw InvariantViolation("LP optimizer does not reproduce the optimum under the objective");
    report.optimum = check;
    report.argmax = std::move(x);
    report.method = "lp-jointree";
  } else {
    const BruteResult brute = brute_force_optimum(inst, guard);
    report.optimum = brute.value;
    report.argmax = brute.argmax;
    report.method = "brute-force";
    report.stats.family_size = close_family(inst, h).family.size();
  }

  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace mcpp
