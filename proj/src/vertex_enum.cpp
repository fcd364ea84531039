#include "mcpp/vertex_enum.hpp"

#include <set>

namespace mcpp {

namespace {

struct ReducedRow {
  std::vector<Rat> g;
  Rat rhs;
};

// Incremental row-echelon state over the reduced space.
struct Echelon {
  std::vector<std::vector<Rat>> rows;  // each row carries rhs in last slot
  std::vector<size_t> pivots;

  // Reduces (g, rhs) against the current rows; returns the residual row or
  // empty if dependent (as a coefficient vector).
  std::vector<Rat> reduce(const ReducedRow& r) const {
    const size_t k = r.g.size();
    std::vector<Rat> w(k + 1);
    for (size_t j = 0; j < k; ++j) w[j] = r.g[j];
    w[k] = r.rhs;
    for (size_t i = 0; i < rows.size(); ++i) {
      const size_t p = pivots[i];
      if (w[p] == 0) continue;
      const Rat f = w[p];
      for (size_t j = 0; j <= k; ++j) w[j] -= f * rows[i][j];
    }
    return w;
  }

  // True if w has a nonzero coefficient (ignoring the rhs slot).
  static bool independent(const std::vector<Rat>& w) {
    for (size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] != 0) return true;
    return false;
  }

  void push(std::vector<Rat> w) {
    const size_t k = w.size() - 1;
    size_t p = 0;
    while (w[p] == 0) ++p;
    const Rat inv = Rat(1) / w[p];
    for (size_t j = 0; j <= k; ++j) w[j] *= inv;
    rows.push_back(std::move(w));
    pivots.push_back(p);
  }
  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }

  // Solves the accumulated triangular system (rank must equal dimension).
  std::vector<Rat> solve() const {
    const size_t k = pivots.size();
    std::vector<Rat> t(k, Rat(0));
    for (size_t i = rows.size(); i-- > 0;) {
      Rat val = rows[i][k];
      for (size_t j = 0; j < k; ++j)
        if (j != pivots[i] && rows[i][j] != 0) val -= rows[i][j] * t[j];
      t[pivots[i]] = val;
    }
    return t;
  }
};

}  // namespace

PointSet enumerate_vertices(const LinearSystem& sys, int coordinate_guard) {
  const size_t d = sys.coords->size();
  if (static_cast<int>(d) > coordinate_guard)
    throw GuardExceeded("enumerate_vertices: " + std::to_string(d) + " coordinates exceed guard " +
                        std::to_string(coordinate_guard) + "; raise the guard explicitly if intended");

  std::vector<std::vector<Rat>> eq_a;
  std::vector<Rat> eq_b;
  std::vector<const Row*> ineqs;
  for (const auto& r : sys.rows) {
    if (r.kind == RowKind::equality) {
      eq_a.push_back(r.a.v);
      eq_b.push_back(r.rhs);
    } else {
      ineqs.push_back(&r);
    }
  }

  PointSet out(sys.coords);
  LinSolveResult eq = eq_a.empty()
                          ? [&] {
                              LinSolveResult r;
                              r.consistent = true;
                              r.particular.assign(d, Rat(0));
                              for (size_t j = 0; j < d; ++j) {
                                std::vector<Rat> dir(d, Rat(0));
                                dir[j] = 1;
                                r.nullspace.push_back(std::move(dir));
                              }
                              return r;
                            }()
                          : solve_linear(eq_a, eq_b);
  if (!eq.consistent) return out;  // empty feasible set

  const size_t k = eq.nullspace.size();
  const auto& x0 = eq.particular;

  // Project the inequalities into the reduced space.
  std::vector<ReducedRow> rows;
  rows.reserve(ineqs.size());
  for (const Row* r : ineqs) {
    ReducedRow rr;
    rr.g.resize(k);
    bool zero = true;
    for (size_t j = 0; j < k; ++j) {
      rr.g[j] = r->a.dot(eq.nullspace[j]);
      zero &= (rr.g[j] == 0);
    }
    rr.rhs = r->rhs - r->a.dot(x0);
    if (zero) {
      if (rr.rhs < 0) return out;  // constant row violated: empty set
      continue;                    // constant row, never part of a basis
    }
    rows.push_back(std::move(rr));
  }

  auto lift_and_record = [&](const std::vector<Rat>& t, std::set<std::vector<Rat>>& found) {
    for (const auto& rr : rows) {
      Rat lhs = 0;
      for (size_t j = 0; j < k; ++j)
        if (rr.g[j] != 0) lhs += rr.g[j] * t[j];
      if (lhs > rr.rhs) return;
    }
    std::vector<Rat> x(x0);
    for (size_t j = 0; j < k; ++j)
      if (t[j] != 0)
        for (size_t i = 0; i < d; ++i) x[i] += t[j] * eq.nullspace[j][i];
    found.insert(std::move(x));
  };

  std::set<std::vector<Rat>> found;
  if (k == 0) {
    lift_and_record({}, found);
  } else {
    // DFS over index-increasing, rank-increasing subsets of tight rows.
    Echelon ech;
    auto dfs = [&](auto&& self, size_t start) -> void {
      if (ech.rows.size() == k) {
        lift_and_record(ech.solve(), found);
        return;
      }
      const size_t needed = k - ech.rows.size();
      for (size_t i = start; i + needed <= rows.size(); ++i) {
        std::vector<Rat> w = ech.reduce(rows[i]);
        if (!Echelon::independent(w)) continue;
        ech.push(std::move(w));
        self(self, i + 1);
        ech.pop();
      }
    };
    dfs(dfs, 0);
  }

  out.points.assign(found.begin(), found.end());
  return out;
}

}  // namespace mcpp
