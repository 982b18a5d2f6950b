#include <gtest/gtest.h>

#include "plectic/cartan_model.hpp"
#include "plectic/expression.hpp"

using namespace plectic;

namespace {

ActionData so_action(int n) {
  return fundamental_fields_linear(LinearAction(so_algebra(n), so_matrices(n)));
}

PolyForm angular_primitive(int n, const Chart& chart) {
  // (1/n) sum_k (-1)^{k+1} x_k dx_1..^k..dx_n
  PolyForm alpha(chart, n - 1);
  for (int k = 0; k < n; ++k) {
    std::vector<int> rest;
    for (int j = 0; j < n; ++j)
      if (j != k) rest.push_back(j);
    alpha += Rational(k % 2 ? -1 : 1, n) * PolyForm::basis(chart, rest, MultiPoly::variable(n, k));
  }
  return alpha;
}

}  // namespace

TEST(Action, So2RotationField) {
  auto a = so_action(2);
  EXPECT_EQ(to_string(a.field(0)), to_string(parse_field("x2 @x1 - x1 @x2", a.chart())));
}

TEST(Action, InsertIntoAreaForm) {
  auto a = so_action(2);
  PolyForm w = parse_form("dx1^dx2", a.chart());
  auto c = insert_g_k(w, a, 1);
  EXPECT_EQ(c.at(make_index_set(std::vector<int>{0})), parse_form("x2 dx2 + x1 dx1", a.chart()));
  EXPECT_TRUE(insert_g_k(w, a, 3).is_zero());
}

TEST(Action, RejectsNonMorphism) {
  Chart c = Chart::numbered("x", 2);
  std::vector<PolyMultiVec> fields{parse_field("@x1", c), parse_field("x1 @x2", c), parse_field("@x2", c)};
  EXPECT_THROW(ActionData(su2_algebra(), c, fields), Error);
}

TEST(Extension, ExactSo2RecoversHeight) {
  auto a = so_action(2);
  auto ext = extension_from_exact(angular_primitive(2, a.chart()), a);
  auto mu = mu_of(ext);
  EXPECT_EQ(mu[0], parse_form("-1/2 x1^2 - 1/2 x2^2", a.chart()));
  EXPECT_TRUE(check_extension(ext, a, Domain::chart(a.chart())).ok());
}

TEST(Extension, ExactSo3Component) {
  auto a = so_action(3);
  auto ext = extension_from_exact(angular_primitive(3, a.chart()), a);
  auto mu = mu_of(ext);
  // e_13 is the second basis element
  EXPECT_EQ(mu[1], parse_form("1/3 x1^2 dx2 + 1/3 x3^2 dx2 - 1/3 x1*x2 dx1 - 1/3 x2*x3 dx3", a.chart()));
  auto rep = check_extension(ext, a, Domain::chart(a.chart()));
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name;
}

TEST(Extension, NonInvariantPrimitiveRejected) {
  auto a = so_action(2);
  EXPECT_THROW(extension_from_exact(parse_form("x1 dx2", a.chart()), a), Error);
}

TEST(Extension, CartanDifferentialSquaresToZero) {
  for (int n = 2; n <= 4; ++n) {
    auto a = so_action(n);
    auto ext = extension_from_exact(angular_primitive(n, a.chart()), a);
    for (const auto& comp : cartan_dG(ext, a))
      for (const auto& [k, v] : comp.values()) EXPECT_TRUE(v.is_zero()) << n;
  }
}

TEST(Extension, ClosedInvariantFormWithoutSteps) {
  auto a = so_action(2);
  CartanCochain c;
  c.omega = parse_form("dx1^dx2", a.chart());
  auto comps = cartan_dG(c, a);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_TRUE(comps[0].at({}).is_zero());
  EXPECT_EQ(comps[1].at({0}), -parse_form("x2 dx2 + x1 dx1", a.chart()));
}

TEST(Extension, ProductOfPlanarRotations) {
  auto a = so_action(2);
  auto ext = extension_from_exact(angular_primitive(2, a.chart()), a);
  auto prod = product_extension(ext, a, ext, a);
  EXPECT_EQ(prod.extension.steps.size(), 2u);
  EXPECT_EQ(prod.extension.omega.degree(), 4);
  auto rep = check_extension(prod.extension, prod.action, Domain::chart(prod.action.chart()));
  EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
}

TEST(Extension, ProductWithSo3Factor) {
  auto a2 = so_action(2);
  auto a3 = so_action(3);
  auto e2 = extension_from_exact(angular_primitive(2, a2.chart()), a2);
  auto e3 = extension_from_exact(angular_primitive(3, a3.chart()), a3);
  for (bool swap : {false, true}) {
    auto prod = swap ? product_extension(e3, a3, e2, a2) : product_extension(e2, a2, e3, a3);
    auto rep = check_extension(prod.extension, prod.action, Domain::chart(prod.action.chart()));
    EXPECT_TRUE(rep.ok()) << swap << " " << rep.first_failure()->name;
  }
}

TEST(Sphere, TwoStepCocycle) {
  for (int n = 2; n <= 5; ++n) {
    auto model = sphere_two_step(n);
    EXPECT_EQ(model.sphere.sample_points.size(), 20u);
    auto rep = check_extension(model.extension, model.action, Domain::level_set(model.sphere));
    EXPECT_TRUE(rep.ok()) << n << ": " << rep.first_failure()->name << " " << rep.first_failure()->witness;
    EXPECT_EQ(model.extension.steps.size(), n >= 4 ? 2u : 1u);
  }
}

TEST(Sphere, HeightFunctionInDimensionTwo) {
  auto model = sphere_two_step(2);
  Domain sphere = Domain::level_set(model.sphere);
  EXPECT_TRUE(sphere.forms_equal(model.extension.step(1).at({0}), parse_form("-x3", model.sphere.ambient)));
  EXPECT_FALSE(sphere.forms_equal(model.extension.step(1).at({0}), parse_form("x3", model.sphere.ambient)));
}

TEST(Sphere, QuadraticTermInDimensionFour) {
  Chart c = Chart::numbered("x", 5);
  // B^{1,2}_{3,4} = +1, (-1)^{4+1+2+3+4} = 1, coefficient 5/8
  EXPECT_EQ(sphere_q(4, 1, 2, 3, 4, c), parse_form("5/24 x5^3 - 1/24 x5^5", c));
  EXPECT_TRUE(sphere_q(4, 1, 2, 2, 3, c).is_zero());
  // exactly one of i, j strictly between l and m flips the sign
  EXPECT_EQ(sphere_q(4, 2, 3, 1, 4, c), parse_form("5/24 x5^3 - 1/24 x5^5", c));
  EXPECT_EQ(sphere_q(4, 1, 3, 2, 4, c), -parse_form("5/24 x5^3 - 1/24 x5^5", c));
}

TEST(Sphere, WrongPrimitiveSignIsCaught) {
  auto model = sphere_two_step(3);
  auto bad = model.extension;
  FormSymTensor p = bad.steps[0];
  p.set({0}, -p.at({0}));
  bad.steps[0] = p;
  auto rep = check_extension(bad, model.action, Domain::level_set(model.sphere));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->name, "dP_1 = iota omega");
}

TEST(Sphere, UnsupportedDimension) { EXPECT_THROW(sphere_two_step(6), Error); }

TEST(TotalComplex, DifferentialSquaresToZero) {
  auto a = so_action(3);
  const auto& chart = a.chart();
  TotalCochain f = total_zero(3, chart, 2);
  f.parts[0].set(0, parse_form("x1*x2 dx3^dx1", chart));
  f.parts[1].set(make_index_set(std::vector<int>{1}), parse_form("x3^2 dx2", chart));
  f.parts[2].set(make_index_set(std::vector<int>{0, 2}), parse_form("x1 - 2 x2*x3", chart));
  auto dd = total_differential(total_differential(f, a.algebra()), a.algebra());
  for (const auto& part : dd.parts) EXPECT_TRUE(part.is_zero());
}

TEST(TotalComplex, AbelianIsSignedDeRham) {
  auto g = abelian_algebra(2);
  Chart chart = Chart::numbered("x", 2);
  TotalCochain f = total_zero(2, chart, 1);
  f.parts[1].set(make_index_set(std::vector<int>{0}), parse_form("x1*x2", chart));
  auto df = total_differential(f, g);
  EXPECT_EQ(df.parts[1].at(make_index_set(std::vector<int>{0})), -parse_form("x2 dx1 + x1 dx2", chart));
  EXPECT_TRUE(df.parts[2].is_zero());
}

TEST(Extension, ProductWithPointFactor) {
  auto a = so_action(2);
  auto ext = extension_from_exact(angular_primitive(2, a.chart()), a);
  Chart point(std::vector<std::string>{});
  ActionData trivial(abelian_algebra(0), point, {});
  auto unit = one_step(PolyForm::scalar(point, MultiPoly::constant(0, 1)), {}, 0);
  auto prod = product_extension(ext, a, unit, trivial);
  EXPECT_EQ(prod.extension.omega, ext.omega);
  EXPECT_EQ(prod.extension.step(1).at({0}), ext.step(1).at({0}));
  EXPECT_TRUE(check_extension(prod.extension, prod.action, Domain::chart(prod.action.chart())).ok());
}
