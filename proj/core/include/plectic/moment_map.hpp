#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plectic/cartan_model.hpp"
#include "plectic/linfty.hpp"
#include "plectic/observables.hpp"

namespace plectic {

// Components f_k in Lambda^k g^* (x) Omega^{n-k}, k = 1..n, for a closed (n+1)-form.
struct MomentMap {
  ActionData action;
  PolyForm omega;
  std::vector<FormCochain> f;  // f[k-1] = f_k

  int n() const { return omega.degree() - 1; }
  const FormCochain& component(int k) const { return f[k - 1]; }
};

MomentMap zero_moment(const ActionData& action, const PolyForm& omega);

// sum_{i<j} (-1)^{i+j+1} c([x_i,x_j], x_1..^i..^j..), i.e. -delta c.
FormCochain bracket_side(const LieAlgebra& g, const FormCochain& c);

// Structure equations on all basis tuples, plus the total-complex formulation
// d f^s = sum_k (-1)^{k+1} iota_g^k omega as an independent cross-check.
// Throws NotClosed, NotInvariant.
CheckReport verify_moment(const MomentMap& m, const Domain& domain);

// f^s_k = s(k) f_k in the total complex, with a zero component in arity 0.
TotalCochain signed_total(const MomentMap& m);
// First failing arity of d f^s = sum_k (-1)^{k+1} iota_g^k omega.
std::optional<std::string> total_complex_violation(const MomentMap& m, const Domain& domain);

// f_k(x_1..x_k) = s(k) iota(v_{x_1} ^ .. ^ v_{x_{k-1}}) mu(x_k) with mu = -P_1.
// Throws NotACocycle unless ext passes check_extension, NotSkew if a component
// fails to be skew on the domain.
MomentMap moment_from_extension(const CartanCochain& ext, const ActionData& action, const Domain& domain);

// (-1)^i s(k) i!(k-i)! / (2^{i-1} (k-2i+1)!).
Rational cartan_coefficient(int i, int k);

// T_i(y_1..y_k) = iota_{v_{y_m}} .. iota_{v_{y_1}} P_i(y_{m+1}, [y_{m+2}, y_{m+3}], ..), m = k-2i+1.
PolyForm cartan_term(const std::vector<FormSymTensor>& steps, const ActionData& action, int n, int i,
                     const std::vector<int>& tuple);

// f_k = sum_i c(i,k) Alt_k T_i on increasing subsets, using skewness of T_i in
// its first m slots to sum over shuffles only.
FormCochain cartan_formula_component(const std::vector<FormSymTensor>& steps, const ActionData& action, int n,
                                     int k);

// Throws NotACocycle unless c passes check_extension.
MomentMap moment_from_cartan(const CartanCochain& c, const ActionData& action, const Domain& domain);

// Compares the general coefficient formula with the closed forms for f_1..f_5
// on arbitrary (not necessarily cocycle) data. Both readings of the middle f_5
// term are reported: antisymmetrized over all five slots, and literally over
// the first four.
CheckReport audit_cartan_displays(const std::vector<FormSymTensor>& steps, const ActionData& action, int n);

// L_{v_x} f_k(y) = sum_i f_k(y_1, .., [x,y_i], .., y_k); first failure.
std::optional<std::string> equivariance_violation(const MomentMap& m, const Domain& domain);

struct ObstructionClass {
  ScalarCochain cocycle;  // degree n+1
  Point base;
  std::optional<ScalarCochain> primitive;

  bool trivial() const { return primitive.has_value(); }
};

// c_p = (-1)^n s(n+1) iota(v_1 ^ .. ^ v_{n+1}) omega |_p. Throws NotInvariant.
ObstructionClass obstruction(const ActionData& action, const PolyForm& omega, const Point& p, const Domain& domain);
ObstructionClass obstruction(const ActionData& action, const PolyForm& omega, const Point& p);

// Existence construction on a star-shaped chart: f_1 = phi, f_k the radial
// primitive of the closed form forced by the structure equation, then
// f_n -= b with delta b = h|_p. Throws InvalidInput unless d phi(x) = -iota_{v_x} omega,
// Obstructed, NoPrimitive.
MomentMap construct_unobstructed(const ActionData& action, const PolyForm& omega, const std::vector<PolyForm>& phi,
                                 const Point& p);

// Lift of the action through the central n-extension by c_p into Ham_inf.
struct ExtensionLift {
  ObstructionClass obstruction;
  BracketTable extended;
  ActionData action;
  ObservablesAlgebra target;
  MorphismData<Observable> morphism;
};

// f_1(x) = (v_x, phi(x)), f_1(r) = (-1)^n r, f_n corrected by its value at p.
// Throws InvalidInput, NoPrimitive.
ExtensionLift extension_lift(const ActionData& action, const PolyForm& omega, const std::vector<PolyForm>& phi,
                             const Point& p);
CheckReport check_extension_lift(const ExtensionLift& lift);

// f_1 + d psi, f_2(x,y) + psi([x,y]) for n = 2.
MomentMap modify_moment_2plectic(const MomentMap& m, const std::vector<MultiPoly>& psi);

// mu(x) = sum_j iota(v_{x_j} ^ v_{x_j'}) omega for x = sum_j [x_j, x_j'].
// Throws NotPerfect, NotInvariant.
std::vector<PolyForm> moment_from_perfect(const ActionData& action, const PolyForm& omega, const Domain& domain);

// The n = 2 conditions written out directly: d f_1(x) = -iota_{v_x} omega,
// f_1([x,y]) - iota(v_x ^ v_y) omega = d f_2(x,y) and
// iota(v_x ^ v_y ^ v_z) omega = f_2(x,[y,z]) - f_2(y,[x,z]) + f_2(z,[x,y]).
CheckReport two_plectic_conditions(const MomentMap& m, const Domain& domain);

// b = (-1)^{n+1} f_n |_p, a primitive of c_p whenever m is a moment map.
ScalarCochain moment_primitive(const MomentMap& m, const Point& p);

}  // namespace plectic
