#include "plectic/linear_solve.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

struct Reduced {
  Matrix rows;              // [A | b | I]
  std::vector<int> pivots;  // pivot column per leading row
};

Reduced reduce(const Matrix& a, const std::vector<Rational>* b, int cols) {
  const int m = static_cast<int>(a.size());
  const int width = cols + 1 + m;
  Reduced r;
  r.rows.assign(m, std::vector<Rational>(width, Rational(0)));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != cols) throw Error(ErrorKind::SizeMismatch, "ragged matrix");
    for (int j = 0; j < cols; ++j) r.rows[i][j] = a[i][j];
    if (b) r.rows[i][cols] = (*b)[i];
    r.rows[i][cols + 1 + i] = 1;
  }
  int row = 0;
  for (int col = 0; col < cols && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (!is_zero(r.rows[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(r.rows[row], r.rows[piv]);
    Rational inv = 1 / r.rows[row][col];
    for (int j = col; j < width; ++j) r.rows[row][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || is_zero(r.rows[i][col])) continue;
      Rational f = r.rows[i][col];
      for (int j = col; j < width; ++j)
        if (!is_zero(r.rows[row][j])) r.rows[i][j] -= f * r.rows[row][j];
    }
    r.pivots.push_back(col);
    ++row;
  }
  return r;
}

std::vector<std::vector<Rational>> nullspace_from(const Reduced& r, int cols) {
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SolveResult solve_linear(const LinearSystem& system) {
  const int m = static_cast<int>(system.matrix.size());
  if (static_cast<int>(system.rhs.size()) != m) throw Error(ErrorKind::SizeMismatch, "rhs length != row count");
  const int cols = m == 0 ? 0 : static_cast<int>(system.matrix[0].size());
  Reduced r = reduce(system.matrix, &system.rhs, cols);
  const int rank = static_cast<int>(r.pivots.size());
  for (int i = rank; i < m; ++i) {
    if (!is_zero(r.rows[i][cols])) {
      std::vector<Rational> cert(r.rows[i].begin() + cols + 1, r.rows[i].end());
      return Inconsistent{std::move(cert)};
    }
  }
  LinearSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (int i = 0; i < rank; ++i) sol.particular[r.pivots[i]] = r.rows[i][cols];
  sol.nullspace = nullspace_from(r, cols);
  return sol;
}

int matrix_rank(const Matrix& m, int cols) { return static_cast<int>(reduce(m, nullptr, cols).pivots.size()); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m, int cols) {
  return nullspace_from(reduce(m, nullptr, cols), cols);
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw Error(ErrorKind::SizeMismatch, "matrix/vector size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(m[i][j]) && !is_zero(x[j])) out[i] += m[i][j] * x[j];
  }
  return out;
}

}  // namespace plectic
