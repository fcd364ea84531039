#include "mcpp/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace mcpp {

RMatrix RMatrix::transposed() const {
  // Column labels of the transpose are synthetic row ids.
  std::vector<Mono> row_labels;
  row_labels.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) row_labels.push_back({static_cast<int>(i)});
  RMatrix t(make_coords(std::move(row_labels)));
  for (size_t j = 0; j < num_cols(); ++j) {
    std::vector<Rat> r(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) r[i] = rows[i][j];
    t.add_row(std::move(r));
  }
  return t;
}

namespace {

// Clears denominators row by row; rank is invariant under row scaling.
std::vector<std::vector<Int>> to_integer_rows(const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Int l = 1;
    for (const auto& q : r) l = lcm(l, Int(denominator(q)));
    std::vector<Int> ir(r.size());
    for (size_t j = 0; j < r.size(); ++j)
      ir[j] = Int(numerator(r[j])) * (l / Int(denominator(r[j])));
    out.push_back(std::move(ir));
  }
  return out;
}

}  // namespace

int rank(const std::vector<std::vector<Rat>>& rows_in) {
  if (rows_in.empty()) return 0;
  auto m = to_integer_rows(rows_in);
  const size_t nr = m.size(), nc = m[0].size();
  // Bareiss fraction-free elimination: all divisions are exact.
  Int prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t piv = row;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < nr; ++i) {
      for (size_t j = col + 1; j < nc; ++j)
        m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

int rank(const RMatrix& m) { return rank(m.rows); }

int affine_rank(const PointSet& points) {
  if (points.points.empty()) throw ValidationError("affine_rank of empty point set");
  const auto& p0 = points.points.front();
  std::vector<std::vector<Rat>> diffs;
  diffs.reserve(points.points.size() - 1);
  for (size_t i = 1; i < points.points.size(); ++i) {
    std::vector<Rat> d(p0.size());
    for (size_t j = 0; j < p0.size(); ++j) d[j] = points.points[i][j] - p0[j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

int affine_dim(const PointSet& points) {
  if (!points.cached_affine_dim) points.cached_affine_dim = affine_rank(points);
  return *points.cached_affine_dim;
}

LinSolveResult solve_linear(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  LinSolveResult res;
  const size_t nr = a.size();
  const size_t nc = nr ? a[0].size() : (b.empty() ? 0 : throw ValidationError("shape mismatch"));
  if (b.size() != nr) throw ValidationError("rhs length does not match row count");

  // Rational Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc + 1));
  for (size_t i = 0; i < nr; ++i) {
    for (size_t j = 0; j < nc; ++j) m[i][j] = a[i][j];
    m[i][nc] = b[i];
  }
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t piv = row;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[row], m[piv]);
    const Rat inv = Rat(1) / m[row][col];
    for (size_t j = col; j <= nc; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (size_t j = col; j <= nc; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  res.rank = static_cast<int>(row);
  for (size_t i = row; i < nr; ++i)
    if (m[i][nc] != 0) return res;  // 0 = nonzero: inconsistent
  res.consistent = true;

  std::vector<bool> is_pivot(nc, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  res.particular.assign(nc, Rat(0));
  for (size_t r = 0; r < pivot_col.size(); ++r)
    res.particular[static_cast<size_t>(pivot_col[r])] = m[r][nc];
  for (size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> dir(nc, Rat(0));
    dir[c] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      dir[static_cast<size_t>(pivot_col[r])] = -m[r][c];
    res.nullspace.push_back(std::move(dir));
  }
  return res;
}

}  // namespace mcpp
