#include "plectic/invariant_poly.hpp"

#include <algorithm>

#include "plectic/combinatorics.hpp"
#include "plectic/error.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexMatrix complex_zero(int n) { return ComplexMatrix(n, std::vector<Complex>(n)); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = static_cast<int>(a.size());
  ComplexMatrix out = complex_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == Complex{}) continue;
      for (int j = 0; j < n; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

Rational real_trace(const ComplexMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i].re;
  return t;
}

std::vector<ComplexMatrix> su_basis(int n) {
  if (n < 2) throw Error(ErrorKind::UnsupportedDimension, "su(N) needs N >= 2");
  const Rational half(1, 2);
  std::vector<ComplexMatrix> out;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      ComplexMatrix m = complex_zero(n);
      m[p][q] = {half, 0};
      m[q][p] = {-half, 0};
      out.push_back(m);
    }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      ComplexMatrix m = complex_zero(n);
      m[p][q] = {0, half};
      m[q][p] = {0, half};
      out.push_back(m);
    }
  for (int p = 0; p + 1 < n; ++p) {
    ComplexMatrix m = complex_zero(n);
    m[p][p] = {0, half};
    m[p + 1][p + 1] = {0, -half};
    out.push_back(m);
  }
  return out;
}

namespace {

std::vector<Rational> flatten(const ComplexMatrix& m) {
  std::vector<Rational> out;
  for (const auto& row : m)
    for (const auto& c : row) {
      out.push_back(c.re);
      out.push_back(c.im);
    }
  return out;
}

}  // namespace

LieAlgebra su_algebra(int n) {
  auto basis = su_basis(n);
  const int d = static_cast<int>(basis.size());
  std::vector<std::vector<Rational>> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  const int rows = static_cast<int>(flat[0].size());
  LinearSystem sys;
  sys.matrix.assign(rows, std::vector<Rational>(d, Rational(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < d; ++c) sys.matrix[r][c] = flat[c][r];
  std::vector<BracketEntry> entries;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix a = basis[i] * basis[j];
      ComplexMatrix b = basis[j] * basis[i];
      ComplexMatrix c = complex_zero(n);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) c[r][s] = a[r][s] - b[r][s];
      sys.rhs = flatten(c);
      auto result = solve_linear(sys);
      auto* sol = std::get_if<LinearSolution>(&result);
      if (!sol) throw Error(ErrorKind::InvalidInput, "su(N) basis not closed under the commutator");
      entries.push_back({i, j, sol->particular});
    }
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra(std::move(names), entries);
}

Rational SymmetricForm::at(std::vector<int> idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = values_.find(idx);
  return it == values_.end() ? Rational(0) : it->second;
}

void SymmetricForm::set(std::vector<int> sorted, const Rational& v) {
  std::sort(sorted.begin(), sorted.end());
  if (plectic::is_zero(v)) values_.erase(sorted);
  else values_[sorted] = v;
}

Rational SymmetricForm::evaluate(const std::vector<LieVector>& xs) const {
  if (static_cast<int>(xs.size()) != degree_) throw Error(ErrorKind::SizeMismatch, "symmetric form arity mismatch");
  Rational out = 0;
  std::vector<int> idx(degree_, 0);
  auto rec = [&](auto&& self, int pos, const Rational& coeff) -> void {
    if (pos == degree_) {
      out += coeff * at(idx);
      return;
    }
    for (int m = 0; m < dim_; ++m) {
      if (plectic::is_zero(xs[pos][m])) continue;
      idx[pos] = m;
      self(self, pos + 1, coeff * xs[pos][m]);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

SymmetricForm symtrace_poly(int n, int k) {
  auto basis = su_basis(n);
  const int d = static_cast<int>(basis.size());
  SymmetricForm q(d, k);
  auto perms = all_permutations(k);
  const Rational scale = Rational(-1) / factorial(k);
  for (const auto& tuple : multisets(d, k)) {
    Rational sum = 0;
    for (const auto& sigma : perms) {
      ComplexMatrix prod = basis[tuple[sigma(1) - 1]];
      for (int i = 2; i <= k; ++i) prod = prod * basis[tuple[sigma(i) - 1]];
      sum += real_trace(prod);
    }
    q.set(tuple, scale * sum);
  }
  return q;
}

std::optional<std::vector<int>> invariance_violation(const SymmetricForm& q, const LieAlgebra& g) {
  const int d = g.dim(), k = q.degree();
  for (int y = 0; y < d; ++y)
    for (const auto& tuple : multisets(d, k)) {
      Rational total = 0;
      for (int i = 0; i < k; ++i) {
        std::vector<LieVector> xs;
        for (int t = 0; t < k; ++t) xs.push_back(basis_vector(d, tuple[t]));
        xs[i] = g.bracket_basis(y, tuple[i]);
        total += q.evaluate(xs);
      }
      if (!is_zero(total)) {
        std::vector<int> witness{y};
        witness.insert(witness.end(), tuple.begin(), tuple.end());
        return witness;
      }
    }
  return std::nullopt;
}

std::vector<LieVector> degeneracy_kernel(const SymmetricForm& q) {
  const int d = q.dim();
  if (q.degree() < 1) return {};
  Matrix m;
  for (const auto& rest : multisets(d, q.degree() - 1)) {
    std::vector<Rational> row(d, Rational(0));
    for (int x = 0; x < d; ++x) {
      std::vector<int> idx = rest;
      idx.push_back(x);
      row[x] = q.at(idx);
    }
    m.push_back(row);
  }
  if (m.empty()) {
    std::vector<LieVector> all;
    for (int i = 0; i < d; ++i) all.push_back(basis_vector(d, i));
    return all;
  }
  return nullspace(m, d);
}

bool is_nondegenerate(const SymmetricForm& q) { return degeneracy_kernel(q).empty(); }

SymmetricForm killing_form(const LieAlgebra& g) {
  const int d = g.dim();
  SymmetricForm b(d, 2);
  // (ad x)_{kj} = [x, e_j]_k
  auto ad = [&](int x) {
    Matrix m(d, std::vector<Rational>(d, Rational(0)));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) m[k][j] = g.bracket_basis(x, j)[k];
    return m;
  };
  std::vector<Matrix> ads;
  for (int i = 0; i < d; ++i) ads.push_back(ad(i));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational t = 0;
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c) t += ads[i][a][c] * ads[j][c][a];
      b.set({i, j}, t);
    }
  return b;
}

namespace {

Matrix bracket_map(const LieAlgebra& g, std::vector<std::vector<int>>& pairs) {
  const int d = g.dim();
  pairs = increasing_subsets(d, 2);
  Matrix m(d, std::vector<Rational>(pairs.size(), Rational(0)));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto& br = g.bracket_basis(pairs[c][0], pairs[c][1]);
    for (int r = 0; r < d; ++r) m[r][c] = br[r];
  }
  return m;
}

}  // namespace

bool is_perfect(const LieAlgebra& g) {
  if (g.dim() == 0) return true;
  std::vector<std::vector<int>> pairs;
  Matrix m = bracket_map(g, pairs);
  return matrix_rank(m, static_cast<int>(pairs.size())) == g.dim();
}

std::vector<std::pair<LieVector, LieVector>> solve_perfect_decomposition(const LieAlgebra& g, const LieVector& x) {
  if (!is_perfect(g)) throw Error(ErrorKind::NotPerfect, "[g,g] is a proper subspace of g");
  if (is_zero(x)) return {};
  std::vector<std::vector<int>> pairs;
  LinearSystem sys;
  sys.matrix = bracket_map(g, pairs);
  sys.rhs = x;
  auto result = solve_linear(sys);
  auto* sol = std::get_if<LinearSolution>(&result);
  if (!sol) throw Error(ErrorKind::NotPerfect, "element is not in [g,g]");
  std::vector<std::pair<LieVector, LieVector>> out;
  const int d = g.dim();
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const Rational& coeff = sol->particular[c];
    if (is_zero(coeff)) continue;
    LieVector a(d, Rational(0));
    a[pairs[c][0]] = coeff;
    out.emplace_back(a, basis_vector(d, pairs[c][1]));
  }
  return out;
}

}  // namespace plectic
