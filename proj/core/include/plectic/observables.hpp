#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plectic/forms.hpp"
#include "plectic/level_set.hpp"

namespace plectic {

// Element of the observables algebra: a form of degree n-1+degree. Degree-0
// elements carry a Hamiltonian vector field; in the Ham variant the field is
// part of the element.
struct Observable {
  int degree = 0;
  PolyForm form;
  std::optional<PolyMultiVec> field;
};

bool is_zero(const Observable& o);
void add_scaled(Observable& acc, const Rational& c, const Observable& v);

// nullopt when d alpha = -iota_v omega on the domain, otherwise the residual.
std::optional<std::string> hamiltonian_pair_check(const PolyMultiVec& v, const PolyForm& alpha,
                                                  const PolyForm& omega, const Domain& domain);

enum class ObservablesVariant { Linf, Ham };

// L_inf(M, omega) or Ham_inf(M, omega) for a closed (n+1)-form, evaluated on
// concrete elements.
class ObservablesAlgebra {
 public:
  // Throws NotClosed unless d omega = 0 on the domain.
  ObservablesAlgebra(Domain domain, PolyForm omega, ObservablesVariant variant = ObservablesVariant::Linf);

  int n() const { return omega_.degree() - 1; }
  const PolyForm& omega() const { return omega_; }
  const Domain& domain() const { return domain_; }
  ObservablesVariant variant() const { return variant_; }
  const Chart& chart() const { return omega_.chart(); }

  // Degree-0 element with witness v. Throws NoHamiltonianWitness.
  Observable hamiltonian(const PolyForm& alpha, const PolyMultiVec& v) const;
  // Element of negative degree deg(alpha) - n + 1.
  Observable form(const PolyForm& alpha) const;
  Observable zero(int degree) const;

  Observable l1(const Observable& a) const;
  // l_k for k = args.size() >= 2. Throws NoHamiltonianWitness when a degree-0
  // argument has no field.
  Observable lk(std::span<const Observable> args) const;
  Observable bracket(std::span<const Observable> args) const;

  std::optional<std::string> difference(const Observable& a, const Observable& b) const;

 private:
  Domain domain_;
  PolyForm omega_;
  ObservablesVariant variant_;
};

// Target adaptor for the morphism checks in linfty.hpp.
class ObservablesTarget {
 public:
  using Value = Observable;
  explicit ObservablesTarget(const ObservablesAlgebra& alg) : alg_(alg) {}

  Value zero() const { return Observable{}; }
  Value l1(const Value& v) const { return alg_.l1(v); }
  Value lk(std::span<const Value> args) const { return alg_.lk(args); }
  std::optional<std::string> difference(const Value& a, const Value& b) const { return alg_.difference(a, b); }

 private:
  const ObservablesAlgebra& alg_;
};

// d iota(v_1 ^ v_2) omega + iota_[v_1,v_2] omega.
PolyForm bracket_identity_residual(const PolyMultiVec& v1, const PolyMultiVec& v2, const PolyForm& omega);
// Left minus right side of
// d iota(v_1..v_m) omega = (-1)^m sum_{i<j} (-1)^{i+j} iota([v_i,v_j], v_1..^i..^j..v_m) omega.
PolyForm big_identity_residual(std::span<const PolyMultiVec> vs, const PolyForm& omega);

// iota(v_1 ^ ... ^ v_k) a = iota_{v_k} ... iota_{v_1} a; zero once the degree runs out.
PolyForm contract_fields(std::span<const PolyMultiVec> vs, const PolyForm& a);

}  // namespace plectic
