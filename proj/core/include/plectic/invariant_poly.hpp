#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plectic/lie_algebra.hpp"

namespace plectic {

struct Complex {
  Rational re{0};
  Rational im{0};
  bool operator==(const Complex&) const = default;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);

using ComplexMatrix = std::vector<std::vector<Complex>>;

ComplexMatrix complex_zero(int n);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
Rational real_trace(const ComplexMatrix& m);

// Rational basis of su(N): (E_pq - E_qp)/2 and i(E_pq + E_qp)/2 for p < q, then
// i(E_pp - E_{p+1,p+1})/2. For N = 2 this is e1, e2, e3 with [e1,e2] = e3.
std::vector<ComplexMatrix> su_basis(int n);
LieAlgebra su_algebra(int n);

// Symmetric k-linear form on g, keyed by non-decreasing index tuples.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  SymmetricForm(int dim, int degree) : dim_(dim), degree_(degree) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, Rational>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  // Any index order.
  Rational at(std::vector<int> idx) const;
  void set(std::vector<int> sorted, const Rational& v);
  // q(x_1, ..., x_k) for arbitrary vectors.
  Rational evaluate(const std::vector<LieVector>& xs) const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<std::vector<int>, Rational> values_;
};

// q_k(x_1..x_k) = -(1/k!) sum_sigma Re Tr(x_sigma(1) ... x_sigma(k)) on su(N).
SymmetricForm symtrace_poly(int n, int k);

// First basis tuple (y, x_1..x_k) where sum_i q(.., [y, x_i], ..) != 0.
std::optional<std::vector<int>> invariance_violation(const SymmetricForm& q, const LieAlgebra& g);

// Kernel of x -> q(x, ., ..., .) into S^{k-1}(g^*).
std::vector<LieVector> degeneracy_kernel(const SymmetricForm& q);
bool is_nondegenerate(const SymmetricForm& q);

// Killing form tr(ad x ad y).
SymmetricForm killing_form(const LieAlgebra& g);

// x = sum_i [x_i, x_i'] with x_i, x_i' drawn from the basis (x_i scaled). Throws NotPerfect.
std::vector<std::pair<LieVector, LieVector>> solve_perfect_decomposition(const LieAlgebra& g, const LieVector& x);
bool is_perfect(const LieAlgebra& g);

}  // namespace plectic
