#include "mcpp/simplex.hpp"

#include <limits>

namespace mcpp {

namespace {

// Dictionary-based primal simplex over exact rationals, Bland's rule.
// Solves max c.y s.t. A y <= b, y >= 0.
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    m_ = a_.size();
    n_ = c_.size();
    nonbasic_.resize(n_);
    basic_.resize(m_);
    for (size_t j = 0; j < n_; ++j) nonbasic_[j] = static_cast<int>(j);
    for (size_t i = 0; i < m_; ++i) basic_[i] = static_cast<int>(n_ + i);
  }

  LpStatus solve() {
    size_t worst = 0;
    for (size_t i = 0; i < m_; ++i)
      if (b_[i] < b_[worst]) worst = i;
    if (m_ > 0 && b_[worst] < 0) {
      // Phase 1: auxiliary variable with coefficient -1 in every row.
      const int aux = static_cast<int>(n_ + m_);
      for (auto& row : a_) row.push_back(Rat(-1));
      std::vector<Rat> saved_c = std::move(c_);
      c_.assign(n_ + 1, Rat(0));
      c_[n_] = -1;
      nonbasic_.push_back(aux);
      ++n_;
      pivot(worst, n_ - 1);  // makes the dictionary feasible
      run();
      const bool feasible = (v_ == 0);
      // Drive the auxiliary variable out of the basis if it lingers at 0.
      for (size_t i = 0; i < m_ && feasible; ++i) {
        if (basic_[i] != aux) continue;
        size_t e = 0;
        while (e < n_ && a_[i][e] == 0) ++e;
        if (e < n_) pivot(i, e);
        break;
      }
      size_t aux_col = 0;
      while (aux_col < n_ && nonbasic_[aux_col] != aux) ++aux_col;
      if (!feasible) return LpStatus::infeasible;
      if (aux_col == n_) return LpStatus::infeasible;  // aux stuck basic at nonzero
      drop_column(aux_col);
      restore_objective(saved_c);
    }
    return run();
  }

  Rat objective_value() const { return v_; }
  long pivots() const { return pivots_; }

  std::vector<Rat> primal(size_t orig_n) const {
    std::vector<Rat> y(orig_n, Rat(0));
    for (size_t i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && static_cast<size_t>(basic_[i]) < orig_n)
        y[static_cast<size_t>(basic_[i])] = b_[i];
    return y;
  }

 private:
  LpStatus run() {
    for (;;) {
      // Bland: entering = smallest variable id with positive reduced cost.
      int e = -1;
      int e_id = std::numeric_limits<int>::max();
      for (size_t j = 0; j < n_; ++j)
        if (c_[j] > 0 && nonbasic_[j] < e_id) {
          e = static_cast<int>(j);
          e_id = nonbasic_[j];
        }
      if (e < 0) return LpStatus::optimal;
      // Leaving: min ratio, ties by smallest basic variable id.
      int l = -1;
      Rat best;
      for (size_t i = 0; i < m_; ++i) {
        if (a_[i][static_cast<size_t>(e)] <= 0) continue;
        const Rat ratio = b_[i] / a_[i][static_cast<size_t>(e)];
        if (l < 0 || ratio < best || (ratio == best && basic_[i] < basic_[static_cast<size_t>(l)]))
          l = static_cast<int>(i), best = ratio;
      }
      if (l < 0) return LpStatus::unbounded;
      pivot(static_cast<size_t>(l), static_cast<size_t>(e));
    }
  }

  void pivot(size_t l, size_t e) {
    ++pivots_;
    const Rat piv = a_[l][e];
    for (size_t j = 0; j < n_; ++j) a_[l][j] /= piv;
    b_[l] /= piv;
    a_[l][e] = Rat(1) / piv;
    for (size_t i = 0; i < m_; ++i) {
      if (i == l || a_[i][e] == 0) continue;
      const Rat f = a_[i][e];
      a_[i][e] = 0;
      for (size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[l][j];
      b_[i] -= f * b_[l];
    }
    if (c_[e] != 0) {
      const Rat f = c_[e];
      c_[e] = 0;
      for (size_t j = 0; j < n_; ++j) c_[j] -= f * a_[l][j];
      v_ += f * b_[l];
    }
    std::swap(basic_[l], nonbasic_[e]);
  }

  void drop_column(size_t col) {
    for (auto& row : a_) row.erase(row.begin() + static_cast<long>(col));
    c_.erase(c_.begin() + static_cast<long>(col));
    nonbasic_.erase(nonbasic_.begin() + static_cast<long>(col));
    --n_;
  }

  // Re-expresses the saved objective in the current nonbasic variables.
  void restore_objective(const std::vector<Rat>& saved_c) {
    c_.assign(n_, Rat(0));
    v_ = 0;
    for (size_t j = 0; j < n_; ++j) {
      const int var = nonbasic_[j];
      if (var >= 0 && static_cast<size_t>(var) < saved_c.size()) c_[j] += saved_c[static_cast<size_t>(var)];
    }
    for (size_t i = 0; i < m_; ++i) {
      const int var = basic_[i];
      if (var < 0 || static_cast<size_t>(var) >= saved_c.size() || saved_c[static_cast<size_t>(var)] == 0)
        continue;
      const Rat f = saved_c[static_cast<size_t>(var)];
      v_ += f * b_[i];
      for (size_t j = 0; j < n_; ++j) c_[j] -= f * a_[i][j];
    }
  }

  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_, c_;
  std::vector<int> nonbasic_, basic_;
  Rat v_ = 0;
  size_t m_ = 0, n_ = 0;
  long pivots_ = 0;
};

// Walks cost-neutral directions until the tight rows pin the point down.
void purify_to_vertex(const LinearSystem& sys, const RVector& objective, std::vector<Rat>& x) {
  const size_t d = sys.coords->size();
  for (;;) {
    std::vector<std::vector<Rat>> tight;
    tight.push_back(objective.v);  // value must not move
    for (const auto& r : sys.rows)
      if (r.kind == RowKind::equality || r.a.dot(x) == r.rhs) tight.push_back(r.a.v);
    LinSolveResult ns = solve_linear(tight, std::vector<Rat>(tight.size(), Rat(0)));
    if (ns.nullspace.empty()) return;  // tight rows have full column rank: a vertex
    const std::vector<Rat>& z = ns.nullspace.front();
    bool moved = false;
    for (int sgn : {+1, -1}) {
      // Largest step keeping every slack row feasible.
      bool bounded = false;
      Rat step;
      for (const auto& r : sys.rows) {
        if (r.kind == RowKind::equality) continue;
        Rat az = 0;
        for (size_t j = 0; j < d; ++j)
          if (r.a.v[j] != 0) az += r.a.v[j] * z[j] * sgn;
        if (az <= 0) continue;
        const Rat slack = r.rhs - r.a.dot(x);
        if (slack == 0) continue;  // already tight, direction keeps it tight
        const Rat t = slack / az;
        if (!bounded || t < step) bounded = true, step = t;
      }
      if (!bounded) continue;
      for (size_t j = 0; j < d; ++j) x[j] += step * z[j] * sgn;
      moved = true;
      break;
    }
    if (!moved)
      throw InvariantViolation("lp_maximize: optimal face is unbounded, feasible set is not a polytope");
  }
}

}  // namespace

LpResult lp_maximize(const LinearSystem& sys, const RVector& objective) {
  if (!(*objective.coords == *sys.coords))
    throw ValidationError("objective labels do not match system labels");
  const size_t d = sys.coords->size();

  // Split free variables into nonnegative pairs; equalities become two rows.
  size_t m = 0;
  for (const auto& r : sys.rows) m += (r.kind == RowKind::equality) ? 2 : 1;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  a.reserve(m);
  for (const auto& r : sys.rows) {
    std::vector<Rat> row(2 * d);
    for (size_t j = 0; j < d; ++j) {
      row[2 * j] = r.a.v[j];
      row[2 * j + 1] = -r.a.v[j];
    }
    a.push_back(row);
    b.push_back(r.rhs);
    if (r.kind == RowKind::equality) {
      for (auto& q : row) q = -q;
      a.push_back(std::move(row));
      b.push_back(-r.rhs);
    }
  }
  std::vector<Rat> c(2 * d);
  for (size_t j = 0; j < d; ++j) {
    c[2 * j] = objective.v[j];
    c[2 * j + 1] = -objective.v[j];
  }

  LpResult res;
  if (a.empty()) {
    // No constraints: bounded only for the zero objective.
    bool zero = true;
    for (const auto& q : c) zero &= (q == 0);
    res.status = zero ? LpStatus::optimal : LpStatus::unbounded;
    res.value = 0;
    res.optimizer.assign(d, Rat(0));
    return res;
  }

  Dictionary dict(std::move(a), std::move(b), std::move(c));
  res.status = dict.solve();
  res.pivots = dict.pivots();
  if (res.status != LpStatus::optimal) return res;

  const std::vector<Rat> y = dict.primal(2 * d);
  res.optimizer.resize(d);
  for (size_t j = 0; j < d; ++j) res.optimizer[j] = y[2 * j] - y[2 * j + 1];
  res.value = dict.objective_value();

  if (!sys.satisfies(res.optimizer) || objective.dot(res.optimizer) != res.value)
    throw InvariantViolation("lp_maximize: simplex returned an inconsistent solution");
  purify_to_vertex(sys, objective, res.optimizer);
  return res;
}

}  // namespace mcpp
