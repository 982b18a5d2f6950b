#include "plectic/moment_map.hpp"

#include <map>
#include <utility>

#include "plectic/combinatorics.hpp"
#include "plectic/error.hpp"
#include "plectic/expression.hpp"
#include "plectic/invariant_poly.hpp"

namespace plectic {

namespace {

int sign_pow(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

PolyForm constant_form(const Chart& chart, const Rational& c) {
  return PolyForm::scalar(chart, MultiPoly::constant(chart.size(), c));
}

FormCochain scaled(const FormCochain& c, const Rational& s) {
  FormCochain out(c.dim(), c.degree(), c.zero());
  for (const auto& [key, v] : c.values()) out.set(key, s * v);
  return out;
}

std::string tuple_name(const LieAlgebra& g, const std::vector<int>& idx) { return format_tuple(g.names(), idx); }

void precheck(const ActionData& action, const PolyForm& omega, const Domain& domain) {
  if (!domain.form_is_zero(exterior_d(omega))) throw Error(ErrorKind::NotClosed, "d omega != 0");
  if (auto bad = invariance_violation(action, omega, domain))
    throw Error(ErrorKind::NotInvariant, "L_v" + action.algebra().name(*bad) + " omega != 0");
}

void require_hamiltonian_phi(const ActionData& action, const PolyForm& omega, const std::vector<PolyForm>& phi,
                             const Domain& domain) {
  const int n = omega.degree() - 1;
  if (static_cast<int>(phi.size()) != action.dim())
    throw Error(ErrorKind::SizeMismatch, "one Hamiltonian form per basis element is required");
  for (int i = 0; i < action.dim(); ++i) {
    if (phi[i].degree() != n - 1) throw Error(ErrorKind::DegreeError, "Hamiltonian forms have degree n-1");
    if (auto bad = hamiltonian_pair_check(action.field(i), phi[i], omega, domain))
      throw Error(ErrorKind::InvalidInput, "d phi(" + action.algebra().name(i) + ") != -iota omega: " + *bad);
  }
}

// f_1 = phi, then f_k = K(-delta f_{k-1} - s(k) iota_g^k omega) for k = 2..n.
std::vector<FormCochain> primitive_tower(const ActionData& action, const PolyForm& omega,
                                         const std::vector<PolyForm>& phi) {
  const int n = omega.degree() - 1;
  const auto& g = action.algebra();
  const Chart& chart = omega.chart();
  std::vector<FormCochain> f;
  f.emplace_back(g.dim(), 1, PolyForm(chart, n - 1));
  for (int i = 0; i < g.dim(); ++i) f[0].set(make_index_set(std::vector<int>{i}), phi[i]);
  for (int k = 2; k <= n; ++k) {
    FormCochain lhs = bracket_side(g, f.back());
    FormCochain iota = insert_g_k(omega, action, k);
    FormCochain fk(g.dim(), k, PolyForm(chart, n - k));
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      PolyForm beta = lhs.at(tuple) - Rational(varsigma(k)) * iota.at(tuple);
      if (!exterior_d(beta).is_zero())
        throw Error(ErrorKind::NoPrimitive, "form to integrate at " + tuple_name(g, tuple) + " is not closed");
      fk.set(make_index_set(tuple), poincare_homotopy(beta));
    }
    f.push_back(std::move(fk));
  }
  return f;
}

void subtract_constants(FormCochain& f, const ScalarCochain& b) {
  const Chart& chart = f.zero().chart();
  for (const auto& [key, v] : b.values()) f.add(key, Rational(-1), constant_form(chart, v));
}

// Cached T_i values on ordered tuples.
class TermCache {
 public:
  TermCache(const std::vector<FormSymTensor>& steps, const ActionData& action, int n)
      : steps_(steps), action_(action), n_(n) {}

  const PolyForm& term(int i, const std::vector<int>& tuple) {
    auto key = std::make_pair(i, tuple);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), cartan_term(steps_, action_, n_, i, tuple)).first->second;
  }

  // (1/s!) sum over sigma in S_s of (-1)^sigma T_i with the first s slots permuted.
  PolyForm alt(int i, const std::vector<int>& tuple, int slots) {
    const int k = static_cast<int>(tuple.size());
    PolyForm out(action_.chart(), n_ - k);
    std::vector<int> arranged = tuple;
    for (const auto& sigma : all_permutations(slots)) {
      for (int t = 0; t < slots; ++t) arranged[t] = tuple[sigma(t + 1) - 1];
      add_scaled(out, Rational(sigma.sign()), term(i, arranged));
    }
    return Rational(1) / factorial(slots) * out;
  }

  PolyForm general(const std::vector<int>& tuple) {
    const int k = static_cast<int>(tuple.size());
    PolyForm out(action_.chart(), n_ - k);
    for (int i = 1; 2 * i <= k + 1; ++i) add_scaled(out, cartan_coefficient(i, k), alt(i, tuple, k));
    return out;
  }

 private:
  const std::vector<FormSymTensor>& steps_;
  const ActionData& action_;
  int n_;
  std::map<std::pair<int, std::vector<int>>, PolyForm> cache_;
};

struct DisplayTerm {
  int i;
  Rational coeff;
  int alt;
};

std::vector<DisplayTerm> display_terms(int k, bool literal_alt4) {
  switch (k) {
    case 1: return {{1, Rational(-1), 1}};
    case 2: return {{1, Rational(-1), 2}};
    case 3: return {{1, Rational(1), 3}, {2, Rational(-1), 3}};
    case 4: return {{1, Rational(1), 4}, {2, Rational(-2), 4}};
    case 5: return {{1, Rational(-1), 5}, {2, Rational(3), literal_alt4 ? 4 : 5}, {3, Rational(-3), 5}};
    default: throw Error(ErrorKind::InvalidInput, "closed forms are listed for k = 1..5");
  }
}

}  // namespace

MomentMap zero_moment(const ActionData& action, const PolyForm& omega) {
  MomentMap m{action, omega, {}};
  for (int k = 1; k <= m.n(); ++k) m.f.emplace_back(action.dim(), k, PolyForm(omega.chart(), m.n() - k));
  return m;
}

FormCochain bracket_side(const LieAlgebra& g, const FormCochain& c) { return scaled(ce_differential(g, c), Rational(-1)); }

TotalCochain signed_total(const MomentMap& m) {
  const int n = m.n();
  TotalCochain t = total_zero(m.action.dim(), m.omega.chart(), n);
  for (int k = 1; k <= n; ++k) t.parts[k] = scaled(m.component(k), Rational(varsigma(k)));
  return t;
}

std::optional<std::string> total_complex_violation(const MomentMap& m, const Domain& domain) {
  const auto& g = m.action.algebra();
  TotalCochain d = total_differential(signed_total(m), g);
  for (int k = 0; k <= m.n() + 1; ++k) {
    FormCochain expected = k == 0 ? FormCochain(g.dim(), 0, PolyForm(m.omega.chart(), m.n() + 1))
                                  : scaled(insert_g_k(m.omega, m.action, k), Rational(sign_pow(k + 1)));
    for (const auto& tuple : increasing_subsets(g.dim(), k))
      if (auto bad = domain.form_difference(d.parts[k].at(tuple), expected.at(tuple)))
        return "arity " + std::to_string(k) + " at " + tuple_name(g, tuple) + ": " + *bad;
  }
  return std::nullopt;
}

CheckReport verify_moment(const MomentMap& m, const Domain& domain) {
  precheck(m.action, m.omega, domain);
  const int n = m.n();
  if (static_cast<int>(m.f.size()) != n) throw Error(ErrorKind::SizeMismatch, "one component per arity 1..n");
  for (int k = 1; k <= n; ++k)
    if (m.component(k).degree() != k || m.component(k).zero().degree() != n - k)
      throw Error(ErrorKind::DegreeError, "f_" + std::to_string(k) + " must take k arguments to (n-k)-forms");
  const auto& g = m.action.algebra();
  CheckReport report;
  report.title = "moment map";

  std::string witness;
  for (int i = 0; i < g.dim() && witness.empty(); ++i) {
    PolyForm lhs = exterior_d(m.component(1).at(make_index_set(std::vector<int>{i})));
    if (auto bad = domain.form_difference(lhs, -interior(m.action.field(i), m.omega)))
      witness = g.name(i) + ": " + *bad;
  }
  report.add("k=1: d f_1(x) = -iota_x omega", witness.empty(), witness);

  for (int k = 2; k <= n + 1; ++k) {
    FormCochain lhs = bracket_side(g, m.component(k - 1));
    FormCochain iota = insert_g_k(m.omega, m.action, k);
    witness.clear();
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      PolyForm rhs = Rational(varsigma(k)) * iota.at(tuple);
      if (k <= n) rhs += exterior_d(m.component(k).at(tuple));
      if (auto bad = domain.form_difference(lhs.at(tuple), rhs)) {
        witness = tuple_name(g, tuple) + ": " + *bad;
        break;
      }
    }
    report.add(k <= n ? "structure equation k=" + std::to_string(k) : "top equation k=" + std::to_string(k),
               witness.empty(), witness);
  }

  const bool direct = report.ok();
  auto total = total_complex_violation(m, domain);
  report.add("total complex agreement", direct == !total,
             std::string("internal error: structure equations ") + (direct ? "pass" : "fail") +
                 " but the total complex " + (total ? "fails at " + *total : std::string("passes")));
  return report;
}

MomentMap moment_from_extension(const CartanCochain& ext, const ActionData& action, const Domain& domain) {
  if (ext.steps.size() != 1) throw Error(ErrorKind::InvalidInput, "a 1-step extension omega + P_1 is required");
  CheckReport check = check_extension(ext, action, domain);
  if (const Verdict* bad = check.first_failure())
    throw Error(ErrorKind::NotACocycle, bad->name + ": " + bad->witness);
  const auto& g = action.algebra();
  const std::vector<PolyForm> mu = mu_of(ext);
  MomentMap m = zero_moment(action, ext.omega);
  const int n = m.n();
  std::vector<int> rest;
  for (int k = 1; k <= n; ++k) {
    const Rational s(varsigma(k));
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      // The value with x_t moved last must not depend on t.
      std::optional<PolyForm> first;
      for (int t = k - 1; t >= 0; --t) {
        rest.clear();
        for (int a = 0; a < k; ++a)
          if (a != t) rest.push_back(tuple[a]);
        PolyForm v = Rational(sign_pow(k - 1 - t)) * s * contract(action, rest, mu[tuple[t]]);
        if (!first) {
          first = std::move(v);
        } else if (auto bad = domain.form_difference(v, *first)) {
          throw Error(ErrorKind::NotSkew, "f_" + std::to_string(k) + " at " + tuple_name(g, tuple) + ": " + *bad);
        }
      }
      m.f[k - 1].set(make_index_set(tuple), std::move(*first));
    }
  }
  return m;
}

Rational cartan_coefficient(int i, int k) {
  Rational num = factorial(i) * factorial(k - i) * Rational(sign_pow(i) * varsigma(k));
  return num / (factorial(k - 2 * i + 1) * Rational(1 << (i - 1)));
}

PolyForm cartan_term(const std::vector<FormSymTensor>& steps, const ActionData& action, int n, int i,
                     const std::vector<int>& tuple) {
  const int k = static_cast<int>(tuple.size());
  const int m = k - 2 * i + 1;
  PolyForm zero(action.chart(), n - k);
  if (m < 0 || i > static_cast<int>(steps.size())) return zero;
  const auto& g = action.algebra();
  std::vector<LieVector> args{basis_vector(g.dim(), tuple[m])};
  for (int q = 0; q < i - 1; ++q) {
    const LieVector& br = g.bracket_basis(tuple[m + 1 + 2 * q], tuple[m + 2 + 2 * q]);
    if (is_zero(br)) return zero;
    args.push_back(br);
  }
  PolyForm p = steps[i - 1].evaluate(args);
  if (p.is_zero()) return zero;
  return contract(action, std::span<const int>(tuple.data(), m), p);
}

FormCochain cartan_formula_component(const std::vector<FormSymTensor>& steps, const ActionData& action, int n,
                                     int k) {
  const auto& g = action.algebra();
  FormCochain out(g.dim(), k, PolyForm(action.chart(), n - k));
  for (int i = 1; 2 * i <= k + 1 && i <= static_cast<int>(steps.size()); ++i) {
    const int m = k - 2 * i + 1;
    const Rational coeff = cartan_coefficient(i, k) * factorial(m) / factorial(k);
    const auto blocks = increasing_subsets(k, m);
    const auto perms = all_permutations(k - m);
    std::vector<int> order(k), arranged(k), rest;
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      PolyForm sum(action.chart(), n - k);
      for (const auto& block : blocks) {
        rest.clear();
        for (int a = 0, b = 0; a < k; ++a) {
          if (b < m && block[b] == a) ++b;
          else rest.push_back(a);
        }
        std::copy(block.begin(), block.end(), order.begin());
        std::copy(rest.begin(), rest.end(), order.begin() + m);
        std::vector<int> probe = order;
        const int shuffle_sign = sort_sign(probe);
        for (int a = 0; a < m; ++a) arranged[a] = tuple[block[a]];
        for (const auto& beta : perms) {
          for (int b = 0; b < k - m; ++b) arranged[m + b] = tuple[rest[beta(b + 1) - 1]];
          add_scaled(sum, Rational(shuffle_sign * beta.sign()), cartan_term(steps, action, n, i, arranged));
        }
      }
      out.add(make_index_set(tuple), coeff, sum);
    }
  }
  return out;
}

MomentMap moment_from_cartan(const CartanCochain& c, const ActionData& action, const Domain& domain) {
  CheckReport check = check_extension(c, action, domain);
  if (const Verdict* bad = check.first_failure())
    throw Error(ErrorKind::NotACocycle, bad->name + ": " + bad->witness);
  MomentMap m = zero_moment(action, c.omega);
  for (int k = 1; k <= m.n(); ++k) m.f[k - 1] = cartan_formula_component(c.steps, action, m.n(), k);
  return m;
}

CheckReport audit_cartan_displays(const std::vector<FormSymTensor>& steps, const ActionData& action, int n) {
  if (n < 5) throw Error(ErrorKind::DegreeError, "the audit needs n >= 5 so that f_5 is defined");
  const auto& g = action.algebra();
  TermCache cache(steps, action, n);
  CheckReport report;
  report.title = "coefficient audit";
  auto display = [&](const std::vector<DisplayTerm>& terms, const std::vector<int>& tuple) {
    PolyForm out(action.chart(), n - static_cast<int>(tuple.size()));
    for (const auto& t : terms) add_scaled(out, t.coeff, cache.alt(t.i, tuple, t.alt));
    return out;
  };
  for (int k = 1; k <= 5; ++k) {
    FormCochain reduced = cartan_formula_component(steps, action, n, k);
    std::string reduction_witness, display_witness;
    const auto terms = display_terms(k, false);
    for (const auto& tuple : increasing_subsets(g.dim(), k)) {
      PolyForm full = cache.general(tuple);
      if (reduction_witness.empty() && !(reduced.at(tuple) - full).is_zero())
        reduction_witness = tuple_name(g, tuple) + ": " + to_string(reduced.at(tuple) - full);
      PolyForm diff = full - display(terms, tuple);
      if (display_witness.empty() && !diff.is_zero()) display_witness = tuple_name(g, tuple) + ": " + to_string(diff);
    }
    report.add("shuffle reduction k=" + std::to_string(k), reduction_witness.empty(), reduction_witness);
    report.add(k < 5 ? "display f_" + std::to_string(k) : "display f_5 with Alt_5 in the middle term",
               display_witness.empty(), display_witness);
  }
  // The printed middle term is not skew in the last slot, so compare on all
  // ordered tuples until a difference shows up.
  const auto literal = display_terms(5, true);
  std::string witness;
  std::vector<int> tuple(5, 0);
  for (bool more = true; more && witness.empty();) {
    PolyForm general = cache.general(tuple);
    PolyForm diff = general - display(literal, tuple);
    if (!diff.is_zero()) witness = tuple_name(g, tuple) + ": " + to_string(diff);
    more = false;
    for (int p = 4; p >= 0; --p) {
      if (++tuple[p] < g.dim()) {
        more = true;
        break;
      }
      tuple[p] = 0;
    }
  }
  report.add("display f_5 with Alt_4 as printed", witness.empty(), witness);
  return report;
}

std::optional<std::string> equivariance_violation(const MomentMap& m, const Domain& domain) {
  const auto& g = m.action.algebra();
  for (int k = 1; k <= m.n(); ++k) {
    const FormCochain& fk = m.component(k);
    for (int x = 0; x < g.dim(); ++x)
      for (const auto& tuple : increasing_subsets(g.dim(), k)) {
        PolyForm lhs = lie_derivative(m.action.field(x), fk.at(tuple));
        PolyForm rhs = fk.zero();
        std::vector<LieVector> args;
        for (int y : tuple) args.push_back(basis_vector(g.dim(), y));
        for (int a = 0; a < k; ++a) {
          const LieVector& br = g.bracket_basis(x, tuple[a]);
          if (is_zero(br)) continue;
          auto shifted = args;
          shifted[a] = br;
          rhs += fk.evaluate(shifted);
        }
        if (auto bad = domain.form_difference(lhs, rhs))
          return "f_" + std::to_string(k) + ", x=" + g.name(x) + ", y=" + tuple_name(g, tuple) + ": " + *bad;
      }
  }
  return std::nullopt;
}

ObstructionClass obstruction(const ActionData& action, const PolyForm& omega, const Point& p, const Domain& domain) {
  if (auto bad = invariance_violation(action, omega, domain))
    throw Error(ErrorKind::NotInvariant, "L_v" + action.algebra().name(*bad) + " omega != 0");
  const int n = omega.degree() - 1;
  FormCochain iota = insert_g_k(omega, action, n + 1);
  ObstructionClass out;
  out.cocycle = evaluate_at(scaled(iota, Rational(sign_pow(n) * varsigma(n + 1))), p);
  out.base = p;
  out.primitive = is_ce_coboundary(action.algebra(), out.cocycle);
  return out;
}

ObstructionClass obstruction(const ActionData& action, const PolyForm& omega, const Point& p) {
  return obstruction(action, omega, p, Domain::chart(action.chart()));
}

MomentMap construct_unobstructed(const ActionData& action, const PolyForm& omega, const std::vector<PolyForm>& phi,
                                 const Point& p) {
  const Domain domain = Domain::chart(action.chart());
  precheck(action, omega, domain);
  require_hamiltonian_phi(action, omega, phi, domain);
  const auto& g = action.algebra();
  ObstructionClass ob = obstruction(action, omega, p, domain);
  if (!ob.trivial()) throw Error(ErrorKind::Obstructed, "c_p = " + to_string(ob.cocycle, g));
  MomentMap m{action, omega, primitive_tower(action, omega, phi)};
  const int n = m.n();
  FormCochain h = ce_differential(g, m.component(n));
  const FormCochain top = insert_g_k(omega, action, n + 1);
  for (const auto& [key, v] : top.values()) h.add(key, Rational(varsigma(n + 1)), v);
  for (const auto& [key, v] : h.values())
    if (!v.coefficient(0).is_constant())
      throw Error(ErrorKind::NoPrimitive, "top residual is not locally constant: " + to_string(v));
  auto b = is_ce_coboundary(g, evaluate_at(h, p));
  if (!b) throw Error(ErrorKind::Obstructed, "delta b = h|_p has no solution");
  subtract_constants(m.f[n - 1], *b);
  return m;
}

ExtensionLift extension_lift(const ActionData& action, const PolyForm& omega, const std::vector<PolyForm>& phi,
                             const Point& p) {
  const Domain domain = Domain::chart(action.chart());
  precheck(action, omega, domain);
  require_hamiltonian_phi(action, omega, phi, domain);
  const auto& g = action.algebra();
  const Chart& chart = omega.chart();
  const int n = omega.degree() - 1;
  ObstructionClass ob = obstruction(action, omega, p, domain);
  BracketTable extended = central_extension(g, ob.cocycle, n);
  std::vector<FormCochain> tower = primitive_tower(action, omega, phi);
  subtract_constants(tower[n - 1], evaluate_at(tower[n - 1], p));

  MorphismData<Observable> morphism;
  morphism.n = n;
  for (int k = 1; k <= n; ++k) {
    Observable zero{1 - k, PolyForm(chart, n - k), std::nullopt};
    if (k == 1) zero.field = PolyMultiVec(chart, 1);
    Cochain<Observable> fk(g.dim(), k, zero);
    for (const auto& [key, v] : tower[k - 1].values()) {
      Observable o{1 - k, v, std::nullopt};
      if (k == 1) o.field = action.field(indices_of(key)[0]);
      fk.set(key, std::move(o));
    }
    // Degree-0 images keep their field even where the form vanishes.
    if (k == 1)
      for (int i = 0; i < g.dim(); ++i) {
        IndexSet key = make_index_set(std::vector<int>{i});
        Observable o = fk.at(key);
        o.field = action.field(i);
        fk.set(key, std::move(o));
      }
    morphism.f.push_back(std::move(fk));
  }
  Observable central{1 - n, constant_form(chart, Rational(sign_pow(n))), std::nullopt};
  if (n == 1) central.field = PolyMultiVec(chart, 1);
  morphism.central = std::move(central);
  return ExtensionLift{std::move(ob), std::move(extended), action,
                       ObservablesAlgebra(domain, omega, ObservablesVariant::Ham), std::move(morphism)};
}

CheckReport check_extension_lift(const ExtensionLift& lift) {
  ObservablesTarget target(lift.target);
  CheckReport report = morphism_report(target, lift.action.algebra(), lift.morphism, &lift.obstruction.cocycle);
  report.title = "extension lift";
  return report;
}

MomentMap modify_moment_2plectic(const MomentMap& m, const std::vector<MultiPoly>& psi) {
  if (m.n() != 2) throw Error(ErrorKind::DegreeError, "the modification is defined for n = 2");
  const auto& g = m.action.algebra();
  if (static_cast<int>(psi.size()) != g.dim()) throw Error(ErrorKind::SizeMismatch, "one function per basis element");
  const Chart& chart = m.omega.chart();
  MomentMap out = m;
  for (int i = 0; i < g.dim(); ++i)
    out.f[0].add(make_index_set(std::vector<int>{i}), Rational(1), exterior_d(PolyForm::scalar(chart, psi[i])));
  for (const auto& tuple : increasing_subsets(g.dim(), 2)) {
    const LieVector& br = g.bracket_basis(tuple[0], tuple[1]);
    MultiPoly value(chart.size());
    for (int l = 0; l < g.dim(); ++l)
      if (!is_zero(br[l])) value += br[l] * psi[l];
    out.f[1].add(make_index_set(tuple), Rational(1), PolyForm::scalar(chart, value));
  }
  return out;
}

std::vector<PolyForm> moment_from_perfect(const ActionData& action, const PolyForm& omega, const Domain& domain) {
  if (auto bad = invariance_violation(action, omega, domain))
    throw Error(ErrorKind::NotInvariant, "L_v" + action.algebra().name(*bad) + " omega != 0");
  const auto& g = action.algebra();
  std::vector<PolyForm> mu;
  for (int i = 0; i < g.dim(); ++i) {
    PolyForm sum(omega.chart(), omega.degree() - 2);
    for (const auto& [x, y] : solve_perfect_decomposition(g, basis_vector(g.dim(), i))) {
      std::vector<LieVector> pair{x, y};
      sum += contract_vectors(action, pair, omega);
    }
    if (auto bad = hamiltonian_pair_check(action.field(i), sum, omega, domain))
      throw Error(ErrorKind::InvalidInput, "internal error: d mu(" + g.name(i) + ") != -iota omega: " + *bad);
    mu.push_back(std::move(sum));
  }
  return mu;
}

CheckReport two_plectic_conditions(const MomentMap& m, const Domain& domain) {
  if (m.n() != 2) throw Error(ErrorKind::DegreeError, "the two conditions are stated for n = 2");
  const auto& g = m.action.algebra();
  const int dim = g.dim();
  const FormCochain& f1 = m.component(1);
  const FormCochain& f2 = m.component(2);
  auto v = [&](int i) -> const PolyMultiVec& { return m.action.field(i); };
  auto e = [&](int i) { return basis_vector(dim, i); };
  CheckReport report;
  report.title = "2-plectic conditions";

  std::string witness;
  for (int x = 0; x < dim && witness.empty(); ++x) {
    std::vector<LieVector> arg{e(x)};
    if (auto bad = domain.form_difference(exterior_d(f1.evaluate(arg)), -interior(v(x), m.omega)))
      witness = g.name(x) + ": " + *bad;
  }
  report.add("d f_1(x) = -iota_x omega", witness.empty(), witness);

  witness.clear();
  for (int x = 0; x < dim && witness.empty(); ++x)
    for (int y = x + 1; y < dim && witness.empty(); ++y) {
      std::vector<LieVector> br{g.bracket_basis(x, y)};
      std::vector<LieVector> xy{e(x), e(y)};
      PolyForm lhs = f1.evaluate(br) - interior(v(y), interior(v(x), m.omega));
      if (auto bad = domain.form_difference(lhs, exterior_d(f2.evaluate(xy))))
        witness = tuple_name(g, {x, y}) + ": " + *bad;
    }
  report.add("f_1([x,y]) - iota(v_x ^ v_y) omega = d f_2(x,y)", witness.empty(), witness);

  witness.clear();
  for (int x = 0; x < dim && witness.empty(); ++x)
    for (int y = x + 1; y < dim && witness.empty(); ++y)
      for (int z = y + 1; z < dim && witness.empty(); ++z) {
        PolyForm lhs = interior(v(z), interior(v(y), interior(v(x), m.omega)));
        std::vector<LieVector> a{e(x), g.bracket_basis(y, z)};
        std::vector<LieVector> b{e(y), g.bracket_basis(x, z)};
        std::vector<LieVector> c{e(z), g.bracket_basis(x, y)};
        PolyForm rhs = f2.evaluate(a) - f2.evaluate(b) + f2.evaluate(c);
        if (auto bad = domain.form_difference(lhs, rhs)) witness = tuple_name(g, {x, y, z}) + ": " + *bad;
      }
  report.add("iota(v_x ^ v_y ^ v_z) omega = f_2(x,[y,z]) - f_2(y,[x,z]) + f_2(z,[x,y])", witness.empty(), witness);
  return report;
}

ScalarCochain moment_primitive(const MomentMap& m, const Point& p) {
  ScalarCochain b = evaluate_at(m.component(m.n()), p);
  ScalarCochain out(b.dim(), b.degree(), Rational(0));
  for (const auto& [key, v] : b.values()) out.set(key, Rational(sign_pow(m.n() + 1)) * v);
  return out;
}

}  // namespace plectic
