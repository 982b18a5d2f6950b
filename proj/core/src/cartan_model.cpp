#include "plectic/cartan_model.hpp"

#include "plectic/error.hpp"
#include "plectic/expression.hpp"

namespace plectic {

std::string format_tuple(const std::vector<std::string>& names, const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + names[idx[i]];
  return out + ")";
}

FormSymTensor empty_step(int dim, int i, const Chart& chart, int form_degree) {
  return FormSymTensor(dim, i, PolyForm(chart, std::max(form_degree, 0)));
}

namespace {

// P_i as a symmetric tensor, with P_0 = omega.
FormSymTensor component(const CartanCochain& c, int i, int dim) {
  if (i == 0) {
    FormSymTensor t(dim, 0, PolyForm(c.omega.chart(), c.omega.degree()));
    t.set({}, c.omega);
    return t;
  }
  return c.step(i);
}

}  // namespace

std::vector<FormSymTensor> cartan_dG(const CartanCochain& c, const ActionData& action) {
  const int m = c.total_degree();
  const int dim = action.dim();
  const int steps = static_cast<int>(c.steps.size());
  const Chart& chart = c.omega.chart();
  std::vector<FormSymTensor> out;
  for (int j = 0; m + 1 - 2 * j >= 0; ++j) {
    FormSymTensor comp(dim, j, PolyForm(chart, m + 1 - 2 * j));
    if (j > steps + 1) {
      out.push_back(comp);
      continue;
    }
    const bool has_pj = j <= steps && m - 2 * j >= 0;
    FormSymTensor pj = has_pj ? component(c, j, dim) : FormSymTensor();
    FormSymTensor prev = j >= 1 ? component(c, j - 1, dim) : FormSymTensor();
    for (const auto& tuple : multisets(dim, j)) {
      PolyForm value = comp.zero();
      if (has_pj) value += exterior_d(pj.at(tuple));
      if (j >= 1) {
        PolyForm sym = comp.zero();
        for (int a = 0; a < j; ++a) {
          std::vector<int> rest;
          for (int t = 0; t < j; ++t)
            if (t != a) rest.push_back(tuple[t]);
          const PolyForm& p = prev.at(rest);
          if (!p.is_zero()) sym += interior(action.field(tuple[a]), p);
        }
        value -= Rational(1, j) * sym;
      }
      comp.set(tuple, std::move(value));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::string cartan_condition_name(int j, int steps) {
  if (j == 0) return "d omega = 0";
  if (j == 1 && steps >= 1) return "dP_1 = iota omega";
  if (j == steps + 1) {
    if (steps == 1) return "iota_x mu(x) = 0";
    if (steps == 0) return "iota omega = 0";
    return "Sym iota P_" + std::to_string(steps) + " = 0";
  }
  return "dP_" + std::to_string(j) + " = Sym iota P_" + std::to_string(j - 1);
}

std::optional<std::string> step_invariance_violation(const FormSymTensor& p, const ActionData& action,
                                                     const Domain& domain) {
  const int dim = action.dim();
  const int i = p.degree();
  const auto& g = action.algebra();
  for (int y = 0; y < dim; ++y)
    for (const auto& tuple : multisets(dim, i)) {
      PolyForm lhs = lie_derivative(action.field(y), p.at(tuple));
      PolyForm rhs = p.zero();
      for (int a = 0; a < i; ++a) {
        std::vector<LieVector> xs;
        for (int t = 0; t < i; ++t) xs.push_back(basis_vector(dim, tuple[t]));
        xs[a] = g.bracket_basis(y, tuple[a]);
        rhs += p.evaluate(xs);
      }
      if (auto diff = domain.form_difference(lhs, rhs)) {
        std::vector<int> w{y};
        w.insert(w.end(), tuple.begin(), tuple.end());
        return format_tuple(g.names(), w) + ": " + *diff;
      }
    }
  return std::nullopt;
}

CheckReport check_extension(const CartanCochain& c, const ActionData& action, const Domain& domain) {
  CheckReport report;
  report.title = "extension";
  const int steps = static_cast<int>(c.steps.size());
  const auto& names = action.algebra().names();
  auto comps = cartan_dG(c, action);
  for (int j = 0; j < static_cast<int>(comps.size()) && j <= steps + 1; ++j) {
    std::string witness;
    for (const auto& tuple : multisets(action.dim(), j)) {
      const PolyForm& v = comps[j].at(tuple);
      if (v.is_zero()) continue;
      if (!domain.form_is_zero(v)) {
        witness = format_tuple(names, tuple) + ": residual " + to_string(v);
        break;
      }
    }
    report.add(cartan_condition_name(j, steps), witness.empty(), witness);
  }
  if (auto bad = invariance_violation(action, c.omega, domain))
    report.fail("omega invariant", "L_v" + names[*bad] + " omega != 0");
  else
    report.pass("omega invariant");
  for (int i = 1; i <= steps; ++i) {
    auto bad = step_invariance_violation(c.step(i), action, domain);
    report.add("P_" + std::to_string(i) + " invariant", !bad, bad.value_or(""));
  }
  return report;
}

CartanCochain one_step(const PolyForm& omega, const std::vector<PolyForm>& mu, int dim) {
  CartanCochain c;
  c.omega = omega;
  FormSymTensor p = empty_step(dim, 1, omega.chart(), omega.degree() - 2);
  for (int i = 0; i < dim; ++i) p.set({i}, -mu[i]);
  c.steps.push_back(std::move(p));
  return c;
}

std::vector<PolyForm> mu_of(const CartanCochain& c) {
  if (c.steps.empty()) throw Error(ErrorKind::DegreeError, "cochain has no linear term");
  std::vector<PolyForm> mu;
  for (int i = 0; i < c.steps[0].dim(); ++i) mu.push_back(-c.steps[0].at({i}));
  return mu;
}

CartanCochain extension_from_exact(const PolyForm& alpha, const ActionData& action, const Domain& domain) {
  if (auto bad = invariance_violation(action, alpha, domain))
    throw Error(ErrorKind::NotInvariant, "L_v" + action.algebra().name(*bad) + " alpha != 0");
  std::vector<PolyForm> mu;
  for (int i = 0; i < action.dim(); ++i) mu.push_back(interior(action.field(i), alpha));
  return one_step(exterior_d(alpha), mu, action.dim());
}

CartanCochain extension_from_exact(const PolyForm& alpha, const ActionData& action) {
  return extension_from_exact(alpha, action, Domain::chart(action.chart()));
}

namespace {

// Concatenated chart; clashing names fall back to x1..x_{n1+n2}.
Chart product_chart(const Chart& a, const Chart& b) {
  for (const auto& name : b.names())
    if (a.index_of(name)) return Chart::numbered("x", a.size() + b.size());
  return a.concat(b);
}

}  // namespace

ProductExtension product_extension(const CartanCochain& e1, const ActionData& a1, const CartanCochain& e2,
                                   const ActionData& a2) {
  if (e1.steps.size() != 1 || e2.steps.size() != 1)
    throw Error(ErrorKind::InvalidInput, "product needs two 1-step extensions");
  Chart chart = product_chart(a1.chart(), a2.chart());
  const int off = a1.chart().size();
  const int d1 = a1.dim(), d2 = a2.dim();
  std::vector<PolyMultiVec> fields;
  for (const auto& v : a1.fields()) fields.push_back(v.embed(chart, 0));
  for (const auto& v : a2.fields()) fields.push_back(v.embed(chart, off));
  ActionData action(direct_sum(a1.algebra(), a2.algebra()), chart, std::move(fields));

  PolyForm w1 = e1.omega.embed(chart, 0), w2 = e2.omega.embed(chart, off);
  std::vector<PolyForm> mu1, mu2;
  for (const auto& f : mu_of(e1)) mu1.push_back(f.embed(chart, 0));
  for (const auto& f : mu_of(e2)) mu2.push_back(f.embed(chart, off));

  CartanCochain ext;
  ext.omega = wedge(w1, w2);
  const int m = ext.omega.degree();
  FormSymTensor eta_neg = empty_step(d1 + d2, 1, chart, m - 2);
  for (int i = 0; i < d1; ++i) eta_neg.set({i}, -wedge(mu1[i], w2));
  for (int j = 0; j < d2; ++j) eta_neg.set({d1 + j}, -wedge(w1, mu2[j]));
  ext.steps.push_back(std::move(eta_neg));
  if (m - 4 >= 0) {
    FormSymTensor p = empty_step(d1 + d2, 2, chart, m - 4);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) p.set({i, d1 + j}, Rational(1, 2) * wedge(mu1[i], mu2[j]));
    ext.steps.push_back(std::move(p));
  }
  return {std::move(action), std::move(ext)};
}

namespace {

// dx_{S} on the chart for 0-based S, with S sorted.
PolyForm dx_set(const Chart& chart, const std::vector<int>& s, const MultiPoly& coeff) {
  return PolyForm::basis(chart, s, coeff);
}

std::vector<int> complement(int n, std::initializer_list<int> removed) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (std::find(removed.begin(), removed.end(), k) == removed.end()) out.push_back(k);
  return out;
}

int sign_pow(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

}  // namespace

PolyForm sphere_p(int n, int i, int j, const Chart& chart) {
  const int nv = n + 1;
  MultiPoly t = MultiPoly::variable(nv, n);  // x_{n+1}
  // alpha = sum_{k<=n} (-1)^{k+1} x_k dx_1..^k..dx_n
  PolyForm alpha(chart, n - 1);
  for (int k = 0; k < n; ++k)
    alpha += Rational(sign_pow(k)) * dx_set(chart, complement(n, {k}), MultiPoly::variable(nv, k));
  // v_ij = x_j d_i - x_i d_j (1-based i < j)
  PolyMultiVec v(chart, 1);
  v.add_term(IndexSet(1) << (i - 1), MultiPoly::variable(nv, j - 1));
  v.add_term(IndexSet(1) << (j - 1), -MultiPoly::variable(nv, i - 1));
  PolyForm first = (Rational(sign_pow(n + 1)) / n) * (t * interior(v, alpha));
  MultiPoly h = t - Rational(1, 3) * t * t * t;
  PolyForm second = make_rational(sign_pow(i + j + n) * (n + 1), n) * dx_set(chart, complement(n, {i - 1, j - 1}), h);
  return first + second;
}

PolyForm sphere_q(int n, int i, int j, int l, int m, const Chart& chart) {
  const int nv = n + 1;
  const int deg = std::max(n - 4, 0);
  if (i == l || i == m || j == l || j == m) return PolyForm(chart, deg);
  if (n < 4) return PolyForm(chart, 0);
  MultiPoly t = MultiPoly::variable(nv, n);
  MultiPoly t3 = t * t * t;
  MultiPoly h = Rational(1, 3) * t3 - Rational(1, 15) * t3 * t * t;
  int between = 0;
  for (int x : {i, j})
    if (l < x && x < m) ++between;
  const int sign = sign_pow(n) * sign_pow(i + j + l + m) * sign_pow(between);
  std::vector<int> rest = complement(n, {i - 1, j - 1, l - 1, m - 1});
  return make_rational(sign * (n + 1), 2 * n) * dx_set(chart, rest, h);
}

SphereModel sphere_two_step(int n, int sample_count) {
  if (n < 2 || n > 5) throw Error(ErrorKind::UnsupportedDimension, "sphere model needs 2 <= n <= 5");
  const int nv = n + 1;
  Chart chart = Chart::numbered("x", nv);
  LevelSetChart ls = make_level_set(chart, unit_sphere_constraint(nv), sphere_points(nv, sample_count));

  auto small = so_matrices(n);
  std::vector<Matrix> padded;
  for (const auto& s : small) {
    Matrix m(nv, std::vector<Rational>(nv, Rational(0)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] = s[r][c];
    padded.push_back(m);
  }
  ActionData action = fundamental_fields_linear(LinearAction(so_algebra(n), padded), chart);

  std::vector<std::array<int, 2>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  const int dim = static_cast<int>(pairs.size());

  CartanCochain ext;
  ext.omega = PolyForm(chart, n);
  for (int k = 0; k < nv; ++k)
    ext.omega += Rational(sign_pow(k)) * dx_set(chart, complement(nv, {k}), MultiPoly::variable(nv, k));
  FormSymTensor p = empty_step(dim, 1, chart, n - 2);
  for (int b = 0; b < dim; ++b) p.set({b}, sphere_p(n, pairs[b][0], pairs[b][1], chart));
  ext.steps.push_back(std::move(p));
  if (n >= 4) {
    FormSymTensor q = empty_step(dim, 2, chart, n - 4);
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b)
        q.set({a, b}, sphere_q(n, pairs[a][0], pairs[a][1], pairs[b][0], pairs[b][1], chart));
    ext.steps.push_back(std::move(q));
  }
  return {std::move(ls), std::move(action), std::move(ext)};
}

TotalCochain total_zero(int dim, const Chart& chart, int degree) {
  TotalCochain t;
  t.degree = degree;
  for (int k = 0; k <= degree; ++k) t.parts.emplace_back(dim, k, PolyForm(chart, degree - k));
  return t;
}

FormCochain apply_d(const FormCochain& c) {
  FormCochain out(c.dim(), c.degree(), PolyForm(c.zero().chart(), c.zero().degree() + 1));
  for (const auto& [s, v] : c.values()) out.set(s, exterior_d(v));
  return out;
}

TotalCochain total_differential(const TotalCochain& f, const LieAlgebra& g) {
  const Chart& chart = f.parts.empty() ? Chart() : f.parts[0].zero().chart();
  TotalCochain out = total_zero(g.dim(), chart, f.degree + 1);
  for (int k = 0; k <= f.degree + 1; ++k) {
    FormCochain& target = out.parts[k];
    if (k >= 1) {
      FormCochain delta = ce_differential(g, f.parts[k - 1]);
      for (const auto& [s, v] : delta.values()) target.add(s, Rational(1), v);
    }
    if (k <= f.degree) {
      FormCochain df = apply_d(f.parts[k]);
      const Rational sign(k % 2 ? -1 : 1);
      for (const auto& [s, v] : df.values()) target.add(s, sign, v);
    }
  }
  return out;
}

}  // namespace plectic
