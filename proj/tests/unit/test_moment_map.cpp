#include <gtest/gtest.h>

#include "plectic/expression.hpp"
#include "plectic/moment_map.hpp"
#include "support.hpp"

using namespace plectic;
using namespace plectic::testing;

namespace {

ActionData so_action(int n) { return fundamental_fields_linear(LinearAction(so_algebra(n), so_matrices(n))); }

MultiPoly radius_squared(int n) {
  MultiPoly r(n);
  for (int i = 0; i < n; ++i) r += MultiPoly::variable(n, i) * MultiPoly::variable(n, i);
  return r;
}

// p(r^2) (1/n) iota_E vol, invariant under SO(n).
PolyForm random_radial_primitive(const Chart& chart, Rng& rng) {
  const int n = chart.size();
  MultiPoly r2 = radius_squared(n);
  MultiPoly p = MultiPoly::constant(n, rng.rational());
  if (is_zero(p.constant_term())) p = MultiPoly::constant(n, 1);
  p += rng.rational() * r2;
  if (rng.coin()) p += rng.rational() * r2 * r2;
  return p * volume_primitive(chart);
}

ActionData adjoint_action(const LieAlgebra& g, int size) {
  std::vector<Matrix> mats;
  for (int i = 0; i < g.dim(); ++i) {
    Matrix m(size, std::vector<Rational>(size, Rational(0)));
    for (int j = 0; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k) m[k][j] = g.bracket_basis(i, j)[k];
    mats.push_back(std::move(m));
  }
  return fundamental_fields_linear(LinearAction(g, mats));
}

std::vector<FormSymTensor> random_steps(const ActionData& a, int n, int count, Rng& rng) {
  std::vector<FormSymTensor> steps;
  for (int i = 1; i <= count; ++i) {
    const int deg = n + 1 - 2 * i;
    FormSymTensor p(a.dim(), i, PolyForm(a.chart(), deg));
    for (const auto& idx : multisets(a.dim(), i)) p.set(idx, random_form(a.chart(), deg, 1, rng, 2));
    steps.push_back(std::move(p));
  }
  return steps;
}

MomentMap sorn_moment(int n) {
  auto a = so_action(n);
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  return moment_from_extension(ext, a, Domain::chart(a.chart()));
}

MomentMap noteq_moment() {
  Chart c({"t1", "t2", "z"});
  ActionData a(abelian_algebra(2), c, {parse_field("@t1", c), parse_field("@t2", c)});
  PolyForm omega = parse_form("dt1^dt2^dz", c);
  auto ext = one_step(omega, {parse_form("z dt2", c), parse_form("-z dt1", c)}, 2);
  MomentMap m = moment_from_extension(ext, a, Domain::chart(c));
  m.f[0].add(make_index_set(std::vector<int>{0}), Rational(1), parse_form("dt1", c));
  m.f[0].add(make_index_set(std::vector<int>{1}), Rational(1), parse_form("dt2", c));
  m.f[1].add(make_index_set(std::vector<int>{0, 1}), Rational(1), parse_form("7/2", c));
  return m;
}

std::vector<int> key(std::initializer_list<int> idx) { return std::vector<int>(idx); }

}  // namespace

TEST(MomentMap, ClassicalSo2Height) {
  MomentMap m = sorn_moment(2);
  EXPECT_EQ(m.component(1).at(key({0})), parse_form("-1/2 x1^2 - 1/2 x2^2", m.omega.chart()));
  EXPECT_TRUE(verify_moment(m, Domain::chart(m.omega.chart())).ok());
}

TEST(MomentMap, SoNFromExtensionVerifies) {
  for (int n = 2; n <= 4; ++n) {
    MomentMap m = sorn_moment(n);
    auto rep = verify_moment(m, Domain::chart(m.omega.chart()));
    EXPECT_TRUE(rep.ok()) << n << " " << rep.first_failure()->name << " " << rep.first_failure()->witness;
    EXPECT_EQ(rep.items.size(), static_cast<std::size_t>(n + 1));
  }
}

TEST(MomentMap, So3SecondComponent) {
  MomentMap m = sorn_moment(3);
  EXPECT_EQ(m.component(2).at(key({0, 1})), parse_form("-1/3 x1^3 - 1/3 x1*x2^2 - 1/3 x1*x3^2", m.omega.chart()));
}

TEST(MomentMap, ZeroActionZeroMap) {
  Chart c = Chart::numbered("x", 3);
  ActionData a(abelian_algebra(2), c, {PolyMultiVec(c, 1), PolyMultiVec(c, 1)});
  PolyForm omega = parse_form("x1 dx1^dx2^dx3", c);
  EXPECT_TRUE(verify_moment(zero_moment(a, omega), Domain::chart(c)).ok());
}

TEST(MomentMap, PreconditionsThrow) {
  auto a = so_action(2);
  MomentMap m = zero_moment(a, parse_form("x1 dx1^dx2", a.chart()));
  try {
    verify_moment(m, Domain::chart(a.chart()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
  Chart c = Chart::numbered("x", 3);
  ActionData t(abelian_algebra(1), c, {PolyMultiVec(c, 1)});
  try {
    verify_moment(zero_moment(t, parse_form("x1 dx2", c)), Domain::chart(c));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
}

TEST(MomentMap, PerturbedComponentFailsBothFormulations) {
  MomentMap m = sorn_moment(3);
  m.f[1].add(make_index_set(key({0, 2})), Rational(1), parse_form("x1", m.omega.chart()));
  auto rep = verify_moment(m, Domain::chart(m.omega.chart()));
  EXPECT_FALSE(rep.find("structure equation k=2")->ok);
  EXPECT_TRUE(rep.find("total complex agreement")->ok);
  EXPECT_TRUE(total_complex_violation(m, Domain::chart(m.omega.chart())).has_value());
}

TEST(MomentMap, ExtensionComponentsAreEquivariant) {
  for (int n = 2; n <= 4; ++n) {
    MomentMap m = sorn_moment(n);
    auto bad = equivariance_violation(m, Domain::chart(m.omega.chart()));
    EXPECT_FALSE(bad) << *bad;
  }
}

TEST(MomentMap, LinearActionEulerFormula) {
  // f_k(x)|_p = -s(k)/(n+1) iota(p ^ phi(x_1)p ^ .. ^ phi(x_k)p) omega on R^3 with n = 2.
  MomentMap m = sorn_moment(3);
  const Chart& c = m.omega.chart();
  PolyMultiVec e = euler_field(c);
  const auto& a = m.action;
  for (int k = 1; k <= 2; ++k)
    for (const auto& tuple : increasing_subsets(3, k)) {
      PolyMultiVec wedge_v = e;
      // v_x = -phi(x)p
      for (int i : tuple) wedge_v = wedge(wedge_v, Rational(-1) * a.field(i));
      PolyForm expected = Rational(-varsigma(k), 3) * interior(wedge_v, m.omega);
      EXPECT_EQ(m.component(k).at(tuple), expected) << k;
    }
}

TEST(MomentMap, CartanAgreesWithExtensionOnRandomOneStep) {
  auto rng = test_rng(11);
  for (int n = 2; n <= 4; ++n) {
    auto a = so_action(n);
    Domain d = Domain::chart(a.chart());
    for (int trial = 0; trial < 4; ++trial) {
      auto ext = extension_from_exact(random_radial_primitive(a.chart(), rng), a);
      MomentMap from_ext = moment_from_extension(ext, a, d);
      MomentMap from_cartan = moment_from_cartan(ext, a, d);
      for (int k = 1; k <= from_ext.n(); ++k)
        EXPECT_EQ(from_ext.component(k), from_cartan.component(k)) << n << " k=" << k;
      EXPECT_TRUE(verify_moment(from_cartan, d).ok());
    }
  }
}

TEST(MomentMap, CoefficientsOfLowArities) {
  EXPECT_EQ(cartan_coefficient(1, 1), Rational(-1));
  EXPECT_EQ(cartan_coefficient(1, 2), Rational(-1));
  EXPECT_EQ(cartan_coefficient(1, 3), Rational(1));
  EXPECT_EQ(cartan_coefficient(2, 3), Rational(-1));
  EXPECT_EQ(cartan_coefficient(2, 4), Rational(-2));
  EXPECT_EQ(cartan_coefficient(3, 5), Rational(-3));
  EXPECT_EQ(cartan_coefficient(2, 5), Rational(3));
}

TEST(MomentMap, CoefficientAuditOnRandomData) {
  auto rng = test_rng(12);
  struct Case {
    LieAlgebra g;
    int size;
  };
  std::vector<Case> cases{{su2_algebra(), 4}, {solvable4_algebra(), 4}, {so_algebra(4), 6}};
  bool literal_differs = false;
  for (const auto& cs : cases) {
    auto a = adjoint_action(cs.g, cs.size);
    auto rep = audit_cartan_displays(random_steps(a, 5, 3, rng), a, 5);
    for (const auto& v : rep.items) {
      if (v.name == "display f_5 with Alt_4 as printed") {
        literal_differs = literal_differs || !v.ok;
        continue;
      }
      EXPECT_TRUE(v.ok) << v.name << ": " << v.witness;
    }
  }
  EXPECT_TRUE(literal_differs);
}

TEST(MomentMap, SphereModelsFromCartan) {
  for (int n = 3; n <= 5; ++n) {
    auto s = sphere_two_step(n);
    Domain d = Domain::level_set(s.sphere);
    MomentMap m = moment_from_cartan(s.extension, s.action, d);
    auto rep = verify_moment(m, d);
    EXPECT_TRUE(rep.ok()) << n << " " << rep.first_failure()->name << " " << rep.first_failure()->witness;
    auto bad = equivariance_violation(m, d);
    EXPECT_FALSE(bad) << *bad;
  }
}

TEST(Obstruction, TranslationsOfThePlane) {
  auto a = translation_action(2);
  PolyForm omega = parse_form("dx1^dx2", a.chart());
  auto ob = obstruction(a, omega, {Rational(0), Rational(0)});
  EXPECT_EQ(ob.cocycle.at(key({0, 1})), Rational(-1));
  EXPECT_FALSE(ob.trivial());
  std::vector<PolyForm> phi{parse_form("-x2", a.chart()), parse_form("x1", a.chart())};
  try {
    construct_unobstructed(a, omega, phi, {Rational(0), Rational(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Obstructed);
  }
}

TEST(Obstruction, So3TrivialAtSeveralPoints) {
  auto a = so_action(3);
  PolyForm omega = volume_form(a.chart());
  for (const Point& p : {Point{0, 0, 0}, Point{1, 2, -1}, Point{Rational(1, 2), 0, 3}}) {
    auto ob = obstruction(a, omega, p);
    EXPECT_TRUE(ob.trivial());
  }
}

TEST(Obstruction, FixedPointGivesZeroCocycle) {
  auto a = so_action(4);
  auto ob = obstruction(a, volume_form(a.chart()), Point(4, Rational(0)));
  EXPECT_TRUE(ob.cocycle.is_zero());
}

TEST(Obstruction, MomentMapGivesPrimitive) {
  for (int n = 2; n <= 4; ++n) {
    MomentMap m = sorn_moment(n);
    for (const Point& p : {Point(n, Rational(1)), Point(n, Rational(-2, 3))}) {
      auto ob = obstruction(m.action, m.omega, p);
      EXPECT_EQ(ce_differential(m.action.algebra(), moment_primitive(m, p)), ob.cocycle) << n;
    }
  }
}

TEST(Construct, So3FromExactPrimitive) {
  auto a = so_action(3);
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  auto mu = mu_of(ext);
  MomentMap m = construct_unobstructed(a, ext.omega, mu, {Rational(1), Rational(0), Rational(2)});
  auto rep = verify_moment(m, Domain::chart(a.chart()));
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(m.component(1).at(key({i})), mu[i]);
}

TEST(Construct, So4VolumeThreeStages) {
  auto a = so_action(4);
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  MomentMap m = construct_unobstructed(a, ext.omega, mu_of(ext), Point(4, Rational(1)));
  auto rep = verify_moment(m, Domain::chart(a.chart()));
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
}

TEST(Construct, SymplecticConstantShiftRemoved) {
  auto lift = cotangent_lift(LinearAction(so_algebra(3), so_matrices(3)), 1);
  PolyForm omega = exterior_d(lift.alpha);
  const Chart& c = omega.chart();
  std::vector<PolyForm> mu, phi;
  for (int i = 0; i < 3; ++i) {
    mu.push_back(interior(lift.action.field(i), lift.alpha));
    phi.push_back(mu.back() + PolyForm::scalar(c, MultiPoly::constant(c.size(), Rational(i + 1))));
  }
  MomentMap m = construct_unobstructed(lift.action, omega, phi, Point(c.size(), Rational(0)));
  EXPECT_TRUE(verify_moment(m, Domain::chart(c)).ok());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(m.component(1).at(key({i})), mu[i]);
}

TEST(Construct, RejectsNonHamiltonianPhi) {
  auto a = so_action(2);
  std::vector<PolyForm> phi{parse_form("x1", a.chart())};
  EXPECT_THROW(construct_unobstructed(a, volume_form(a.chart()), phi, {Rational(0), Rational(0)}), Error);
}

TEST(ExtensionLift, HeisenbergFromPlaneTranslations) {
  auto a = translation_action(2);
  PolyForm omega = parse_form("dx1^dx2", a.chart());
  std::vector<PolyForm> phi{parse_form("-x2", a.chart()), parse_form("x1", a.chart())};
  auto lift = extension_lift(a, omega, phi, {Rational(1), Rational(2)});
  auto rep = check_extension_lift(lift);
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
  EXPECT_TRUE(check_generalized_jacobi(lift.extended, 3).ok());
}

TEST(ExtensionLift, VolumeTranslationsInThreeSpace) {
  auto a = translation_action(3);
  PolyForm omega = volume_form(a.chart());
  std::vector<PolyForm> phi{parse_form("-x2 dx3", a.chart()), parse_form("-x3 dx1", a.chart()),
                            parse_form("-x1 dx2", a.chart())};
  auto lift = extension_lift(a, omega, phi, {Rational(0), Rational(1), Rational(0)});
  EXPECT_FALSE(lift.obstruction.trivial());
  auto rep = check_extension_lift(lift);
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
}

TEST(ExtensionLift, TrivialObstructionStillLifts) {
  auto a = so_action(3);
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  auto lift = extension_lift(a, ext.omega, mu_of(ext), {Rational(0), Rational(0), Rational(0)});
  EXPECT_TRUE(lift.obstruction.cocycle.is_zero());
  EXPECT_TRUE(check_extension_lift(lift).ok());
}

TEST(ExtensionLift, WrongCentralSignFails) {
  auto a = translation_action(2);
  PolyForm omega = parse_form("dx1^dx2", a.chart());
  std::vector<PolyForm> phi{parse_form("-x2", a.chart()), parse_form("x1", a.chart())};
  auto lift = extension_lift(a, omega, phi, {Rational(0), Rational(0)});
  lift.morphism.central->form = -lift.morphism.central->form;
  EXPECT_FALSE(check_extension_lift(lift).ok());
}

TEST(NonCocycle, NoteqPassesButIsNotACocycle) {
  MomentMap m = noteq_moment();
  Domain d = Domain::chart(m.omega.chart());
  auto rep = verify_moment(m, d);
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
  EXPECT_FALSE(equivariance_violation(m, d));
  std::vector<PolyForm> mu{m.component(1).at(key({0})), m.component(1).at(key({1}))};
  auto ext = one_step(m.omega, mu, 2);
  auto check = check_extension(ext, m.action, d);
  ASSERT_NE(check.first_failure(), nullptr);
  EXPECT_EQ(check.first_failure()->name, "iota_x mu(x) = 0");
  EXPECT_EQ(interior(m.action.field(0), parse_form("dt1", m.omega.chart())),
            parse_form("1", m.omega.chart()));
}

TEST(NonCocycle, ModificationReproducesNoteq) {
  Chart c({"t1", "t2", "z"});
  ActionData a(abelian_algebra(2), c, {parse_field("@t1", c), parse_field("@t2", c)});
  PolyForm omega = parse_form("dt1^dt2^dz", c);
  MomentMap base = moment_from_extension(one_step(omega, {parse_form("z dt2", c), parse_form("-z dt1", c)}, 2), a,
                                         Domain::chart(c));
  MomentMap moved = modify_moment_2plectic(base, {parse_polynomial("t1", c), parse_polynomial("t2", c)});
  EXPECT_EQ(moved.component(1).at(key({0})), parse_form("z dt2 + dt1", c));
  EXPECT_EQ(moved.component(2), base.component(2));
  EXPECT_TRUE(verify_moment(moved, Domain::chart(c)).ok());
}

TEST(NonCocycle, ModificationWithZeroIsIdentity) {
  MomentMap m = sorn_moment(3);
  Chart c = m.omega.chart();
  MomentMap same = modify_moment_2plectic(m, std::vector<MultiPoly>(3, MultiPoly(3)));
  for (int k = 1; k <= 2; ++k) EXPECT_EQ(same.component(k), m.component(k));
  MomentMap moved = modify_moment_2plectic(m, {parse_polynomial("x1^2", c), parse_polynomial("x2", c),
                                               parse_polynomial("x3*x1", c)});
  EXPECT_TRUE(verify_moment(moved, Domain::chart(c)).ok());
}

TEST(TwoPlectic, ConditionsMatchVerification) {
  std::vector<MomentMap> maps{sorn_moment(3), noteq_moment()};
  MomentMap broken = sorn_moment(3);
  broken.f[1].add(make_index_set(key({1, 2})), Rational(1), parse_form("x2", broken.omega.chart()));
  maps.push_back(broken);
  // delta vanishes on Lambda^2 so(3), so a constant shift of f_2 is still a moment map.
  MomentMap shifted = sorn_moment(3);
  shifted.f[1].add(make_index_set(key({0, 1})), Rational(1), parse_form("5", shifted.omega.chart()));
  maps.push_back(shifted);
  std::vector<bool> expected{true, true, false, true};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    Domain d = Domain::chart(maps[i].omega.chart());
    EXPECT_EQ(verify_moment(maps[i], d).ok(), expected[i]) << i;
    EXPECT_EQ(two_plectic_conditions(maps[i], d).ok(), expected[i]) << i;
  }
}

TEST(Perfect, So3VolumeMatchesExactUpToClosed) {
  auto a = so_action(3);
  PolyForm omega = volume_form(a.chart());
  Domain d = Domain::chart(a.chart());
  auto mu = moment_from_perfect(a, omega, d);
  auto exact = mu_of(extension_from_exact(volume_primitive(a.chart()), a));
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(exterior_d(mu[i] - exact[i]).is_zero());
  MomentMap m = construct_unobstructed(a, omega, mu, Point(3, Rational(0)));
  EXPECT_TRUE(verify_moment(m, d).ok());
}

TEST(Perfect, AbelianRejected) {
  auto a = translation_action(2);
  try {
    moment_from_perfect(a, parse_form("dx1^dx2", a.chart()), Domain::chart(a.chart()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPerfect);
  }
}
