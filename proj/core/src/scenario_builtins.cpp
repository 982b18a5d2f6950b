#include <array>
#include <functional>
#include <map>

#include "plectic/expression.hpp"
#include "plectic/scenario.hpp"

namespace plectic {

namespace {

const std::vector<std::string> kMomentChecks{"jacobi",           "extension",          "verify-moment",
                                             "expected-values",  "build-from-cartan",  "build-from-extension",
                                             "obstruction",      "unobstructed-construct", "coalgebra-crosscheck"};

Geometry linear_geometry(const LinearAction& rep, const Chart& chart, PolyForm omega) {
  Geometry geo{fundamental_fields_linear(rep, chart), rep.matrices(), Domain::chart(chart), std::move(omega)};
  return geo;
}

MultiPoly radius_squared(const Chart& chart, int count) {
  MultiPoly r(chart.size());
  for (int i = 0; i < count; ++i) r += MultiPoly::variable(chart.size(), i) * MultiPoly::variable(chart.size(), i);
  return r;
}

std::vector<Point> chart_points(int n) {
  std::vector<Point> pts{Point(n, Rational(1)), Point(n, Rational(0)), Point(n, Rational(0))};
  for (int i = 0; i < n; ++i) {
    pts[1][i] = make_rational(i % 2 ? -2 : 1, i + 1);
    pts[2][i] = make_rational(3 - i, 2);
  }
  return pts;
}

Scenario sorn(int n) {
  Scenario s;
  s.name = "sorn-" + std::to_string(n);
  s.summary = "SO(" + std::to_string(n) + ") rotating R^" + std::to_string(n) + " with its volume form";
  s.algebra = so_algebra(n);
  Chart chart = Chart::numbered("x", n);
  s.geometry = linear_geometry(LinearAction(s.algebra, so_matrices(n)), chart, volume_form(chart));
  s.primitive = volume_primitive(chart);
  s.invariants = {radius_squared(chart, n)};
  s.cartan = extension_from_exact(*s.primitive, s.geometry->action);
  s.base_points = chart_points(n);
  s.obstruction = ObstructionExpectation{true, {}};
  if (n == 2) s.expected.push_back({1, {0}, parse_form("-1/2 x1^2 - 1/2 x2^2", chart)});
  if (n == 3) s.expected.push_back({2, {0, 1}, parse_form("-1/3 x1^3 - 1/3 x1*x2^2 - 1/3 x1*x3^2", chart)});
  s.checks = kMomentChecks;
  return s;
}

// sl(2) = span(h, e, f) acting on itself by the adjoint representation.
Scenario linear_action() {
  Scenario s;
  s.name = "linear-action";
  s.summary = "adjoint action of sl(2) on R^3 with the volume form";
  s.algebra = LieAlgebra({"h", "e", "f"}, std::vector<BracketEntry>{{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}});
  std::vector<Matrix> ad;
  for (int i = 0; i < 3; ++i) {
    Matrix m(3, std::vector<Rational>(3, Rational(0)));
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[k][j] = s.algebra.bracket_basis(i, j)[k];
    ad.push_back(std::move(m));
  }
  Chart chart({"a", "b", "c"});
  s.geometry = linear_geometry(LinearAction(s.algebra, ad), chart, volume_form(chart));
  s.primitive = volume_primitive(chart);
  s.invariants = {parse_polynomial("a^2 + b*c", chart)};
  s.cartan = extension_from_exact(*s.primitive, s.geometry->action);
  s.base_points = chart_points(3);
  s.obstruction = ObstructionExpectation{true, {}};
  s.checks = kMomentChecks;
  return s;
}

Scenario ctlift(int m, int n) {
  Scenario s;
  s.name = "ctlift-" + std::to_string(m) + "-" + std::to_string(n);
  s.summary = "SO(" + std::to_string(m) + ") lifted to the " + std::to_string(n) + "-form bundle of R^" +
              std::to_string(m) + " with its canonical form";
  s.algebra = so_algebra(m);
  auto lift = cotangent_lift(LinearAction(s.algebra, so_matrices(m)), n);
  const Chart& chart = lift.action.chart();
  s.geometry = Geometry{lift.action, std::nullopt, Domain::chart(chart), exterior_d(lift.alpha)};
  s.primitive = lift.alpha;
  s.invariants = {radius_squared(chart, m)};
  s.cartan = extension_from_exact(lift.alpha, lift.action);
  s.base_points = chart_points(chart.size());
  s.obstruction = ObstructionExpectation{true, {}};
  s.checks = kMomentChecks;
  return s;
}

Scenario sphere(int n) {
  Scenario s;
  s.name = "sphere-" + std::to_string(n);
  s.summary = "SO(" + std::to_string(n) + ") rotating S^" + std::to_string(n) + " with its volume form";
  auto model = sphere_two_step(n, 20);
  s.algebra = model.action.algebra();
  s.geometry = Geometry{model.action, so_matrices(n), Domain::level_set(model.sphere), model.extension.omega};
  // The sphere acts through the first n coordinates; pad the matrices by a zero row and column.
  for (auto& mat : *s.geometry->matrices) {
    for (auto& row : mat) row.push_back(Rational(0));
    mat.emplace_back(n + 1, Rational(0));
  }
  s.cartan = model.extension;
  s.base_points.assign(model.sphere.sample_points.begin(), model.sphere.sample_points.begin() + 3);
  s.obstruction = ObstructionExpectation{true, {}};
  s.checks = {"extension", "verify-moment", "build-from-cartan", "obstruction"};
  if (n <= 3) s.checks.push_back("build-from-extension");
  return s;
}

Scenario product_2step() {
  Scenario s;
  s.name = "product-2step";
  s.summary = "two planar rotations on R^2 x R^2; the product of 1-step extensions is a 2-step extension";
  auto a = fundamental_fields_linear(LinearAction(so_algebra(2), so_matrices(2)));
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  auto prod = product_extension(ext, a, ext, a);
  s.algebra = prod.action.algebra();
  s.geometry = Geometry{prod.action, std::nullopt, Domain::chart(prod.action.chart()), prod.extension.omega};
  s.cartan = prod.extension;
  s.base_points = chart_points(4);
  s.obstruction = ObstructionExpectation{true, {}};
  s.checks = {"extension", "verify-moment", "build-from-cartan", "obstruction", "unobstructed-construct"};
  return s;
}

// Quaternions g = x1 + x2 i + x3 j + x4 k; su(2) is spanned by e_a = u_a / 2.
constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kQuat{{
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
    {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
    {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
    {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
}};

template <class A, class B, class Mul>
auto quat_mul(const std::array<A, 4>& a, const std::array<B, 4>& b, Mul mul, decltype(mul(a[0], b[0])) zero) {
  std::array<decltype(mul(a[0], b[0])), 4> out;
  out.fill(zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [k, sign] = kQuat[i][j];
      out[k] += Rational(sign) * mul(a[i], b[j]);
    }
  return out;
}

struct Quaternionic {
  Chart chart = Chart::numbered("x", 4);
  std::array<MultiPoly, 4> g, gbar;
  std::array<PolyForm, 4> dg;

  Quaternionic() {
    for (int i = 0; i < 4; ++i) {
      g[i] = MultiPoly::variable(4, i);
      gbar[i] = i == 0 ? g[i] : -g[i];
      dg[i] = PolyForm::basis(chart, {i});
    }
  }

  // Matrix of p -> x p (left) or p -> p x (right) for x = u_a / 2.
  static Matrix multiplication(int a, bool left) {
    Matrix m(4, std::vector<Rational>(4, Rational(0)));
    for (int j = 0; j < 4; ++j) {
      auto [k, sign] = left ? kQuat[a][j] : kQuat[j][a];
      m[k][j] = make_rational(sign, 2);
    }
    return m;
  }

  // Left Maurer-Cartan form gbar dg (left) or dg gbar (right), imaginary parts.
  std::array<PolyForm, 4> maurer_cartan(bool left) const {
    auto pf = [](const MultiPoly& p, const PolyForm& f) { return p * f; };
    auto fp = [](const PolyForm& f, const MultiPoly& p) { return p * f; };
    return left ? quat_mul(gbar, dg, pf, PolyForm(chart, 1)) : quat_mul(dg, gbar, fp, PolyForm(chart, 1));
  }

  PolyForm cartan_form() const {
    auto q = maurer_cartan(true);
    return Rational(4) * wedge(wedge(q[1], q[2]), q[3]);
  }

  // <Ad_h e_a, e_b> = Im_b(h u_a hbar) for h = g or gbar.
  MultiPoly adjoint_pairing(int a, int b, bool inverse) const {
    std::array<MultiPoly, 4> u;
    u.fill(MultiPoly(4));
    u[a] = MultiPoly::constant(4, 1);
    auto mul = [](const MultiPoly& x, const MultiPoly& y) { return x * y; };
    const auto& h = inverse ? gbar : g;
    const auto& hbar = inverse ? g : gbar;
    return quat_mul(quat_mul(h, u, mul, MultiPoly(4)), hbar, mul, MultiPoly(4))[b];
  }
};

LevelSetChart three_sphere(const Chart& chart) {
  return make_level_set(chart, unit_sphere_constraint(4), sphere_points(4, 20));
}

Scenario cartan3form_su2() {
  Scenario s;
  s.name = "cartan3form-su2";
  s.summary = "conjugation action of SU(2) on S^3 with the Cartan 3-form";
  s.algebra = su2_algebra();
  Quaternionic h;
  std::vector<Matrix> phi;
  for (int a = 1; a <= 3; ++a) {
    Matrix m = Quaternionic::multiplication(a, true);
    Matrix r = Quaternionic::multiplication(a, false);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] -= r[i][j];
    phi.push_back(std::move(m));
  }
  LinearAction rep(s.algebra, phi);
  s.geometry = Geometry{fundamental_fields_linear(rep, h.chart), phi, Domain::level_set(three_sphere(h.chart)),
                        h.cartan_form()};
  // mu(x) = 1/2 <theta_L + theta_R, x> with theta^a = 2 Im_a.
  auto q = h.maurer_cartan(true);
  auto r = h.maurer_cartan(false);
  std::vector<PolyForm> mu;
  for (int a = 1; a <= 3; ++a) mu.push_back(q[a] + r[a]);
  s.cartan = one_step(s.geometry->omega, mu, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      MultiPoly f2 = Rational(1, 2) * (h.adjoint_pairing(a + 1, b + 1, false) - h.adjoint_pairing(a + 1, b + 1, true));
      s.expected.push_back({2, {a, b}, PolyForm::scalar(h.chart, f2)});
    }
  const auto& pts = s.geometry->domain.level()->sample_points;
  s.base_points.assign(pts.begin(), pts.begin() + 3);
  s.obstruction = ObstructionExpectation{true, {}};
  s.checks = {"extension", "verify-moment", "expected-values", "build-from-cartan", "build-from-extension",
              "obstruction"};
  return s;
}

ScalarCochain su2_cartan_cocycle() {
  ScalarCochain c(3, 3, Rational(0));
  c.set(make_index_set(std::vector<int>{0, 1, 2}), Rational(1));
  return c;
}

Scenario string_su2() {
  Scenario s;
  s.name = "string-su2";
  s.summary = "left translations of SU(2) on S^3: the obstruction is the Cartan cocycle and the lift is string(su(2))";
  s.algebra = su2_algebra();
  Quaternionic h;
  std::vector<Matrix> phi;
  for (int a = 1; a <= 3; ++a) phi.push_back(Quaternionic::multiplication(a, true));
  LinearAction rep(s.algebra, phi);
  s.geometry = Geometry{fundamental_fields_linear(rep, h.chart), phi, Domain::level_set(three_sphere(h.chart)),
                        h.cartan_form()};
  const auto& pts = s.geometry->domain.level()->sample_points;
  s.base_points.assign(pts.begin(), pts.begin() + 3);
  s.obstruction = ObstructionExpectation{false, {}};
  s.central = CentralData{2, su2_cartan_cocycle(), true};
  s.checks = {"jacobi", "obstruction", "coalgebra-crosscheck"};
  return s;
}

Geometry plane_translations() {
  auto a = translation_action(2);
  return Geometry{a, std::nullopt, Domain::chart(a.chart()), parse_form("dx1^dx2", a.chart())};
}

Scenario heisenberg() {
  Scenario s;
  s.name = "heisenberg";
  s.summary = "translations of the symplectic plane lift through the Heisenberg central extension";
  s.algebra = abelian_algebra(2);
  s.geometry = plane_translations();
  const Chart& chart = s.geometry->action.chart();
  s.phi = std::vector<PolyForm>{parse_form("-x2", chart), parse_form("x1", chart)};
  s.base_points = chart_points(2);
  s.obstruction = ObstructionExpectation{false, {{{0, 1}, Rational(-1)}}};
  ScalarCochain area(2, 2, Rational(0));
  area.set(make_index_set(std::vector<int>{0, 1}), Rational(-1));
  s.central = CentralData{1, area, true};
  s.checks = {"jacobi", "obstruction", "extension-lift", "coalgebra-crosscheck"};
  return s;
}

Scenario translations_obstructed() {
  Scenario s = heisenberg();
  s.name = "translations-obstructed";
  s.summary = "translations of the symplectic plane admit no moment map";
  s.central.reset();
  s.checks = {"jacobi", "obstruction", "unobstructed-construct"};
  return s;
}

Scenario noteq_torus() {
  Scenario s;
  s.name = "noteq-torus";
  s.summary = "translations of T^2 x R with dt1^dt2^dz: an equivariant moment map not induced by an extension";
  s.algebra = abelian_algebra(2);
  Chart chart({"t1", "t2", "z"});
  ActionData a(s.algebra, chart, {parse_field("@t1", chart), parse_field("@t2", chart)});
  s.geometry = Geometry{a, std::nullopt, Domain::chart(chart), parse_form("dt1^dt2^dz", chart)};
  FormCochain f1(2, 1, PolyForm(chart, 1));
  f1.set(make_index_set(std::vector<int>{0}), parse_form("z dt2 + dt1", chart));
  f1.set(make_index_set(std::vector<int>{1}), parse_form("-z dt1 + dt2", chart));
  FormCochain f2(2, 2, PolyForm(chart, 0));
  f2.set(make_index_set(std::vector<int>{0, 1}), parse_form("7/2 - z", chart));
  s.moment = std::vector<FormCochain>{f1, f2};
  s.base_points = chart_points(3);
  s.extension_fails_at = "iota_x mu(x) = 0";
  s.checks = {"verify-moment", "extension"};
  return s;
}

Scenario sutraces() {
  Scenario s;
  s.name = "sutraces";
  s.summary = "symmetrized real traces on su(2)";
  s.algebra = su2_algebra();
  TraceSpec t;
  t.n = 2;
  t.zero = {3};
  t.nondegenerate = {2, 4};
  t.degenerate = {3};
  for (int i = 0; i < 3; ++i) {
    t.values.push_back({2, {i, i}, Rational(1, 2)});
    for (int j = 0; j < 3; ++j) t.values.push_back({4, {i, j, j, j}, i == j ? Rational(-1, 8) : Rational(0)});
  }
  s.traces = t;
  s.checks = {"jacobi", "traces"};
  return s;
}

Scenario property_suite() {
  Scenario s;
  s.name = "property-suite";
  s.summary = "randomized exact invariants of the calculus, the CE complex and the parser";
  s.algebra = su2_algebra();
  s.properties = {"d-squared",  "ce-squared",  "commutator", "bracket-identity",
                  "big-identity", "homotopy-formula", "leibniz", "iota-iota", "parse-roundtrip"};
  s.property_instances = 200;
  s.checks = {"properties"};
  return s;
}

const std::vector<std::pair<std::string, std::function<Scenario()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Scenario()>>> r{
      {"sorn-2", [] { return sorn(2); }},
      {"sorn-3", [] { return sorn(3); }},
      {"sorn-4", [] { return sorn(4); }},
      {"linear-action", linear_action},
      {"ctlift-2-1", [] { return ctlift(2, 1); }},
      {"ctlift-3-2", [] { return ctlift(3, 2); }},
      {"sphere-2", [] { return sphere(2); }},
      {"sphere-3", [] { return sphere(3); }},
      {"sphere-4", [] { return sphere(4); }},
      {"sphere-5", [] { return sphere(5); }},
      {"product-2step", product_2step},
      {"cartan3form-su2", cartan3form_su2},
      {"string-su2", string_su2},
      {"heisenberg", heisenberg},
      {"translations-obstructed", translations_obstructed},
      {"noteq-torus", noteq_torus},
      {"sutraces", sutraces},
      {"property-suite", property_suite},
  };
  return r;
}

}  // namespace

std::vector<std::string> list_builtins() {
  std::vector<std::string> names;
  for (const auto& [name, make] : registry()) names.push_back(name);
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  for (const auto& [n, make] : registry())
    if (n == name) {
      Scenario s = make();
      if (s.expected.empty()) std::erase(s.checks, std::string("expected-values"));
      return s;
    }
  throw Error(ErrorKind::InvalidInput, "unknown builtin scenario '" + name + "'");
}

}  // namespace plectic
