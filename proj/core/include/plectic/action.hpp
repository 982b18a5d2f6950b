#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/cochain.hpp"
#include "plectic/forms.hpp"
#include "plectic/level_set.hpp"
#include "plectic/lie_algebra.hpp"
#include "plectic/linear_solve.hpp"

namespace plectic {

// Representation phi: g -> gl(N) given on the basis. Throws InvalidInput unless
// phi([x,y]) = [phi(x), phi(y)].
class LinearAction {
 public:
  LinearAction() = default;
  LinearAction(LieAlgebra g, std::vector<Matrix> matrices);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  int size() const { return size_; }
  Matrix matrix_of(const LieVector& x) const;

 private:
  LieAlgebra algebra_;
  std::vector<Matrix> matrices_;
  int size_ = 0;
};

// Infinitesimal action by polynomial vector fields, one per basis element.
class ActionData {
 public:
  ActionData() = default;
  // Throws MorphismCheckFailed unless [v_x, v_y] = v_[x,y] on the basis.
  ActionData(LieAlgebra g, Chart chart, std::vector<PolyMultiVec> fields);

  const LieAlgebra& algebra() const { return algebra_; }
  const Chart& chart() const { return chart_; }
  const std::vector<PolyMultiVec>& fields() const { return fields_; }
  const PolyMultiVec& field(int i) const { return fields_[i]; }
  PolyMultiVec field_of(const LieVector& x) const;
  int dim() const { return algebra_.dim(); }

 private:
  LieAlgebra algebra_;
  Chart chart_;
  std::vector<PolyMultiVec> fields_;
};

// First basis pair (i, j) with [v_i, v_j] != v_[e_i,e_j].
std::optional<std::array<int, 2>> morphism_violation(const LieAlgebra& g, const std::vector<PolyMultiVec>& fields);

// v_x = -phi(x) p.
ActionData fundamental_fields_linear(const LinearAction& action, const Chart& chart);
ActionData fundamental_fields_linear(const LinearAction& action);

// iota_{v_{i_m}} ... iota_{v_{i_1}} a.
PolyForm contract(const ActionData& action, std::span<const int> basis, const PolyForm& a);
PolyForm contract_vectors(const ActionData& action, std::span<const LieVector> xs, const PolyForm& a);

// (iota_g^k a)(x_1..x_k) = iota_{v_{x_k}} ... iota_{v_{x_1}} a.
FormCochain insert_g_k(const PolyForm& omega, const ActionData& action, int k);

// First basis index i with L_{v_i} a != 0 on the domain.
std::optional<int> invariance_violation(const ActionData& action, const PolyForm& a, const Domain& domain);

// Canonical lift of a linear action on R^m to Lambda^n T*R^m with coordinates
// (q_1..q_m, p_I), I increasing n-subsets; alpha = sum_I p_I dq_I.
struct CotangentLift {
  ActionData action;
  PolyForm alpha;
};
CotangentLift cotangent_lift(const LinearAction& base, int n);

// Translations of R^d by the abelian algebra: v_{e_i} = d_i.
ActionData translation_action(int d);

}  // namespace plectic
