#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/action.hpp"
#include "plectic/cochain.hpp"
#include "plectic/level_set.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Symmetric multilinear map on g^j, stored on non-decreasing basis tuples.
template <class V>
class SymTensor {
 public:
  using Values = std::map<std::vector<int>, V>;

  SymTensor() = default;
  SymTensor(int dim, int degree, V zero) : dim_(dim), degree_(degree), zero_(std::move(zero)) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const V& zero() const { return zero_; }
  const Values& values() const { return values_; }

  const V& at(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = values_.find(idx);
    return it == values_.end() ? zero_ : it->second;
  }
  void set(std::vector<int> idx, V v) {
    if (static_cast<int>(idx.size()) != degree_) throw Error(ErrorKind::DegreeError, "symmetric key has wrong arity");
    std::sort(idx.begin(), idx.end());
    if (detail::value_is_zero(v)) values_.erase(idx);
    else values_[idx] = std::move(v);
  }

  V evaluate(std::span<const LieVector> xs) const {
    V out = zero_;
    std::vector<int> idx(degree_, 0);
    eval_rec(xs, 0, Rational(1), idx, out);
    return out;
  }

 private:
  void eval_rec(std::span<const LieVector> xs, int pos, const Rational& c, std::vector<int>& idx, V& out) const {
    if (pos == degree_) {
      add_scaled(out, c, at(idx));
      return;
    }
    for (int m = 0; m < dim_; ++m) {
      if (detail::value_is_zero(xs[pos][m])) continue;
      idx[pos] = m;
      eval_rec(xs, pos + 1, c * xs[pos][m], idx, out);
    }
  }

  int dim_ = 0;
  int degree_ = 0;
  V zero_{};
  Values values_;
};

using FormSymTensor = SymTensor<PolyForm>;

// omega + P_1 + ... + P_J in (S(g^*) (x) Omega)^g, g^* in degree 2.
struct CartanCochain {
  PolyForm omega;
  std::vector<FormSymTensor> steps;  // steps[i-1] = P_i, form degree deg(omega) - 2i

  int total_degree() const { return omega.degree(); }
  int dim() const { return steps.empty() ? 0 : steps[0].dim(); }
  const FormSymTensor& step(int i) const { return steps[i - 1]; }
};

FormSymTensor empty_step(int dim, int i, const Chart& chart, int form_degree);

// Component j of d_G c: dP_j - Sym iota P_{j-1}, for all j with nonnegative form degree.
// Sym iota P(x_1..x_j) = (1/j) sum_a iota_{v_{x_a}} P(x_1..^a..x_j).
std::vector<FormSymTensor> cartan_dG(const CartanCochain& c, const ActionData& action);

// Names of the graded pieces of d_G c = 0.
std::string cartan_condition_name(int j, int steps);

// Cocycle conditions and infinitesimal invariance of each P_i.
CheckReport check_extension(const CartanCochain& c, const ActionData& action, const Domain& domain);

// First multiset (y; x_1..x_i) where L_{v_y} P(x) != sum_a P(.., [y,x_a], ..).
std::optional<std::string> step_invariance_violation(const FormSymTensor& p, const ActionData& action,
                                                     const Domain& domain);

// omega = d alpha, P_1(x) = -iota_{v_x} alpha. Throws NotInvariant.
CartanCochain extension_from_exact(const PolyForm& alpha, const ActionData& action, const Domain& domain);
CartanCochain extension_from_exact(const PolyForm& alpha, const ActionData& action);

// 1-step extension omega - mu.
CartanCochain one_step(const PolyForm& omega, const std::vector<PolyForm>& mu, int dim);
// mu(e_i) = -P_1(e_i).
std::vector<PolyForm> mu_of(const CartanCochain& c);

struct ProductExtension {
  ActionData action;
  CartanCochain extension;
};
// omega_1 omega_2 - eta + p on the product chart for g_1 + g_2.
ProductExtension product_extension(const CartanCochain& e1, const ActionData& a1, const CartanCochain& e2,
                                   const ActionData& a2);

struct SphereModel {
  LevelSetChart sphere;
  ActionData action;
  CartanCochain extension;  // omega, P and (n >= 4) Q
};
// Unit S^n in R^{n+1} with so(n) rotating the first n coordinates; 2 <= n <= 5.
SphereModel sphere_two_step(int n, int sample_count = 20);
// Primitive P(e_ij) of iota_{v_ij} omega and the quadratic term Q^{(ij)(lm)}.
PolyForm sphere_p(int n, int i, int j, const Chart& chart);
PolyForm sphere_q(int n, int i, int j, int l, int m, const Chart& chart);

// Element of the total complex: components f_k in Lambda^k g^* (x) Omega^{deg-k}.
struct TotalCochain {
  int degree = 0;
  std::vector<FormCochain> parts;  // parts[k], k = 0..degree
};

TotalCochain total_zero(int dim, const Chart& chart, int degree);
// (d f)_k = delta f_{k-1} + (-1)^k d f_k.
TotalCochain total_differential(const TotalCochain& f, const LieAlgebra& g);
FormCochain apply_d(const FormCochain& c);

}  // namespace plectic
