#include "plectic/lie_algebra.hpp"

#include "plectic/error.hpp"

namespace plectic {

LieVector basis_vector(int dim, int i) {
  LieVector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const LieVector& v) {
  for (const auto& c : v)
    if (!is_zero(c)) return false;
  return true;
}

StructureConstants StructureConstants::from_brackets(int dim, const std::vector<BracketEntry>& entries) {
  StructureConstants sc;
  sc.dim = dim;
  sc.table.assign(static_cast<std::size_t>(dim) * dim, LieVector(dim, Rational(0)));
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= dim || e.j >= dim || static_cast<int>(e.value.size()) != dim)
      throw Error(ErrorKind::InvalidInput, "bracket entry out of range");
    sc.table[e.i * dim + e.j] = e.value;
    LieVector neg = e.value;
    for (auto& c : neg) c = -c;
    sc.table[e.j * dim + e.i] = neg;
  }
  return sc;
}

std::optional<std::array<int, 2>> StructureConstants::antisymmetry_violation() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (table[i * dim + j][k] != -table[j * dim + i][k]) return std::array<int, 2>{i, j};
  return std::nullopt;
}

std::optional<std::array<int, 3>> StructureConstants::jacobi_violation() const {
  auto br = [&](const LieVector& x, int k) {
    LieVector out(dim, Rational(0));
    for (int m = 0; m < dim; ++m) {
      if (is_zero(x[m])) continue;
      for (int l = 0; l < dim; ++l) out[l] += x[m] * table[m * dim + k][l];
    }
    return out;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        LieVector a = br(table[i * dim + j], k);
        LieVector b = br(table[j * dim + k], i);
        LieVector c = br(table[k * dim + i], j);
        for (int l = 0; l < dim; ++l)
          if (!is_zero(a[l] + b[l] + c[l])) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, StructureConstants constants)
    : names_(std::move(names)), constants_(std::move(constants)) {
  if (static_cast<int>(names_.size()) != constants_.dim)
    throw Error(ErrorKind::InvalidInput, "basis names do not match the dimension");
  if (auto v = constants_.antisymmetry_violation())
    throw Error(ErrorKind::InvalidInput,
                "bracket not antisymmetric at (" + names_[(*v)[0]] + ", " + names_[(*v)[1]] + ")");
  if (auto v = constants_.jacobi_violation())
    throw Error(ErrorKind::InvalidInput, "Jacobi identity fails at (" + names_[(*v)[0]] + ", " + names_[(*v)[1]] +
                                             ", " + names_[(*v)[2]] + ")");
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& entries)
    : LieAlgebra(names, StructureConstants::from_brackets(static_cast<int>(names.size()), entries)) {}

LieVector LieAlgebra::bracket(const LieVector& x, const LieVector& y) const {
  const int d = dim();
  LieVector out(d, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (is_zero(y[j])) continue;
      Rational f = x[i] * y[j];
      const auto& b = bracket_basis(i, j);
      for (int k = 0; k < d; ++k)
        if (!is_zero(b[k])) out[k] += f * b[k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : constants_.table)
    if (!is_zero(v)) return false;
  return true;
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

using Mat = std::vector<std::vector<Rational>>;

Mat mat_zero(int n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

Mat commutator(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return out;
}

// Structure constants of a matrix algebra whose basis elements have disjoint
// "leading" entries; coordinates are read off by solving against the basis.
LieAlgebra algebra_from_matrices(std::vector<std::string> names, const std::vector<Mat>& basis) {
  const int d = static_cast<int>(basis.size());
  const int n = d == 0 ? 0 : static_cast<int>(basis[0].size());
  std::vector<BracketEntry> entries;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat c = commutator(basis[i], basis[j]);
      LieVector coords(d, Rational(0));
      // Greedy decomposition: each basis matrix has an entry no other basis matrix touches.
      Mat rem = c;
      for (int b = 0; b < d; ++b) {
        for (int r = 0; r < n; ++r) {
          bool found = false;
          for (int s = 0; s < n; ++s) {
            if (is_zero(basis[b][r][s])) continue;
            bool unique = true;
            for (int o = 0; o < d && unique; ++o)
              if (o != b && !is_zero(basis[o][r][s])) unique = false;
            if (!unique) continue;
            coords[b] = rem[r][s] / basis[b][r][s];
            found = true;
            break;
          }
          if (found) break;
        }
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) rem[r][s] -= coords[b] * basis[b][r][s];
      }
      for (const auto& row : rem)
        for (const auto& v : row)
          if (!is_zero(v)) throw Error(ErrorKind::InvalidInput, "matrix basis not closed under the bracket");
      entries.push_back({i, j, coords});
    }
  return LieAlgebra(std::move(names), entries);
}

}  // namespace

LieAlgebra abelian_algebra(int dim) { return LieAlgebra(numbered("e", dim), std::vector<BracketEntry>{}); }

LieAlgebra su2_algebra() {
  std::vector<BracketEntry> e{
      {0, 1, {0, 0, 1}},
      {1, 2, {1, 0, 0}},
      {2, 0, {0, 1, 0}},
  };
  return LieAlgebra(numbered("e", 3), e);
}

std::vector<std::vector<std::vector<Rational>>> so_matrices(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat m = mat_zero(n);
      m[i][j] = -1;
      m[j][i] = 1;
      out.push_back(m);
    }
  return out;
}

LieAlgebra so_algebra(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  return algebra_from_matrices(std::move(names), so_matrices(n));
}

LieAlgebra heisenberg_algebra() { return LieAlgebra(numbered("e", 3), {{0, 1, {0, 0, 1}}}); }

LieAlgebra solvable4_algebra() {
  auto unit = [](int r, int c) {
    Mat m = mat_zero(3);
    m[r][c] = 1;
    return m;
  };
  return algebra_from_matrices({"E11", "E12", "E22", "E33"}, {unit(0, 0), unit(0, 1), unit(1, 1), unit(2, 2)});
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names()) names.push_back(n);
  std::vector<BracketEntry> entries;
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) {
      LieVector v(d, Rational(0));
      for (int k = 0; k < da; ++k) v[k] = a.bracket_basis(i, j)[k];
      entries.push_back({i, j, v});
    }
  for (int i = 0; i < db; ++i)
    for (int j = i + 1; j < db; ++j) {
      LieVector v(d, Rational(0));
      for (int k = 0; k < db; ++k) v[da + k] = b.bracket_basis(i, j)[k];
      entries.push_back({da + i, da + j, v});
    }
  return LieAlgebra(std::move(names), entries);
}

}  // namespace plectic
