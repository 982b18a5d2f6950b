#include "plectic/observables.hpp"

#include "plectic/combinatorics.hpp"
#include "plectic/error.hpp"
#include "plectic/expression.hpp"

namespace plectic {

bool is_zero(const Observable& o) { return o.form.is_zero() && (!o.field || o.field->is_zero()); }

void add_scaled(Observable& acc, const Rational& c, const Observable& v) {
  if (is_zero(v) || plectic::is_zero(c)) return;
  if (is_zero(acc)) {
    acc.degree = v.degree;
    acc.form = c * v.form;
    if (v.field) acc.field = c * *v.field;
    else acc.field.reset();
    return;
  }
  if (acc.degree != v.degree) throw Error(ErrorKind::DegreeError, "adding observables of different degree");
  acc.form += c * v.form;
  if (acc.field && v.field) *acc.field += c * *v.field;
  else if (acc.field || v.field) acc.field.reset();
}

PolyForm contract_fields(std::span<const PolyMultiVec> vs, const PolyForm& a) {
  PolyForm out = a;
  for (const auto& v : vs) {
    if (out.degree() == 0) return PolyForm(a.chart(), 0);
    out = interior(v, out);
  }
  return out;
}

std::optional<std::string> hamiltonian_pair_check(const PolyMultiVec& v, const PolyForm& alpha,
                                                  const PolyForm& omega, const Domain& domain) {
  PolyForm lhs = exterior_d(alpha);
  PolyForm rhs = -interior(v, omega);
  return domain.form_difference(lhs, rhs);
}

ObservablesAlgebra::ObservablesAlgebra(Domain domain, PolyForm omega, ObservablesVariant variant)
    : domain_(std::move(domain)), omega_(std::move(omega)), variant_(variant) {
  if (omega_.degree() < 2) throw Error(ErrorKind::DegreeError, "observables need an (n+1)-form with n >= 1");
  if (!domain_.form_is_zero(exterior_d(omega_))) throw Error(ErrorKind::NotClosed, "d omega != 0");
}

Observable ObservablesAlgebra::hamiltonian(const PolyForm& alpha, const PolyMultiVec& v) const {
  if (alpha.degree() != n() - 1) throw Error(ErrorKind::DegreeError, "Hamiltonian forms have degree n-1");
  if (auto bad = hamiltonian_pair_check(v, alpha, omega_, domain_))
    throw Error(ErrorKind::NoHamiltonianWitness, "d alpha != -iota_v omega: " + *bad);
  return Observable{0, alpha, v};
}

Observable ObservablesAlgebra::form(const PolyForm& alpha) const {
  const int degree = alpha.degree() - n() + 1;
  if (degree >= 0 || degree < 1 - n()) throw Error(ErrorKind::DegreeError, "form degree outside 0..n-2");
  return Observable{degree, alpha, std::nullopt};
}

Observable ObservablesAlgebra::zero(int degree) const {
  Observable o{degree, PolyForm(chart(), std::max(n() - 1 + degree, 0)), std::nullopt};
  if (degree == 0) o.field = PolyMultiVec(chart(), 1);
  return o;
}

Observable ObservablesAlgebra::l1(const Observable& a) const {
  if (a.degree >= 0) return zero(1);
  Observable out{a.degree + 1, exterior_d(a.form), std::nullopt};
  // d alpha is Hamiltonian with the zero field.
  if (out.degree == 0) out.field = PolyMultiVec(chart(), 1);
  return out;
}

Observable ObservablesAlgebra::lk(std::span<const Observable> args) const {
  const int k = static_cast<int>(args.size());
  if (k < 2) throw Error(ErrorKind::InvalidInput, "l_k needs k >= 2");
  int total = 0;
  for (const auto& a : args) total += a.degree;
  const int out_degree = total + 2 - k;
  if (total < 0 || k > n() + 1) return zero(out_degree);
  std::vector<PolyMultiVec> vs;
  for (const auto& a : args) {
    if (!a.field) throw Error(ErrorKind::NoHamiltonianWitness, "degree-0 argument without a Hamiltonian field");
    vs.push_back(*a.field);
  }
  Observable out{out_degree, Rational(varsigma(k)) * contract_fields(vs, omega_), std::nullopt};
  if (k == 2) out.field = field_bracket(vs[0], vs[1]);
  return out;
}

Observable ObservablesAlgebra::bracket(std::span<const Observable> args) const {
  if (args.size() == 1) return l1(args[0]);
  return lk(args);
}

std::optional<std::string> ObservablesAlgebra::difference(const Observable& a, const Observable& b) const {
  Observable d = a;
  add_scaled(d, Rational(-1), b);
  if (!domain_.form_is_zero(d.form)) return "form residual " + to_string(d.form);
  if (variant_ == ObservablesVariant::Ham && a.degree == 0 && b.degree == 0 && a.field && b.field)
    if (auto bad = domain_.field_difference(*a.field, *b.field)) return "field residual " + *bad;
  return std::nullopt;
}

PolyForm bracket_identity_residual(const PolyMultiVec& v1, const PolyMultiVec& v2, const PolyForm& omega) {
  std::vector<PolyMultiVec> vs{v1, v2};
  return exterior_d(contract_fields(vs, omega)) + interior(field_bracket(v1, v2), omega);
}

PolyForm big_identity_residual(std::span<const PolyMultiVec> vs, const PolyForm& omega) {
  const int m = static_cast<int>(vs.size());
  PolyForm lhs = exterior_d(contract_fields(vs, omega));
  PolyForm rhs(omega.chart(), lhs.degree());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<PolyMultiVec> args{field_bracket(vs[i], vs[j])};
      for (int t = 0; t < m; ++t)
        if (t != i && t != j) args.push_back(vs[t]);
      rhs += Rational(((i + j) % 2) ? -1 : 1) * contract_fields(args, omega);
    }
  if (m % 2) rhs = -rhs;
  return lhs - rhs;
}

}  // namespace plectic
