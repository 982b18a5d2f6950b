#include <gtest/gtest.h>

#include "plectic/expression.hpp"
#include "plectic/linfty.hpp"
#include "plectic/observables.hpp"
#include "support.hpp"

using namespace plectic;
using namespace plectic::testing;

namespace {

Chart plane() { return Chart::numbered("x", 2); }

}  // namespace

TEST(Hamiltonian, PairCheck) {
  Chart c = plane();
  Domain d = Domain::chart(c);
  PolyForm w = parse_form("dx1^dx2", c);
  PolyMultiVec v = parse_field("x2 @x1 - x1 @x2", c);
  EXPECT_FALSE(hamiltonian_pair_check(v, parse_form("-1/2 x1^2 - 1/2 x2^2", c), w, d));
  EXPECT_FALSE(hamiltonian_pair_check(PolyMultiVec(c, 1), parse_form("3", c), w, d));
  auto bad = hamiltonian_pair_check(v, parse_form("x1^2", c), w, d);
  ASSERT_TRUE(bad);
  EXPECT_FALSE(bad->empty());
}

TEST(Observables, PoissonBracketOfCoordinates) {
  Chart c = plane();
  ObservablesAlgebra alg(Domain::chart(c), parse_form("dx1^dx2", c));
  Observable x1 = alg.hamiltonian(parse_form("x1", c), parse_field("@x2", c));
  Observable x2 = alg.hamiltonian(parse_form("x2", c), parse_field("-@x1", c));
  std::vector<Observable> args{x1, x2};
  EXPECT_EQ(alg.lk(args).form, parse_form("1", c));
  EXPECT_THROW(alg.hamiltonian(parse_form("x1", c), parse_field("@x1", c)), Error);
}

TEST(Observables, NegativeDegreeInputs) {
  Chart c = Chart::numbered("x", 3);
  ObservablesAlgebra alg(Domain::chart(c), parse_form("dx1^dx2^dx3", c));
  ASSERT_EQ(alg.n(), 2);
  Observable f = alg.form(parse_form("x1*x2", c));
  EXPECT_EQ(f.degree, -1);
  Observable df = alg.l1(f);
  EXPECT_EQ(df.degree, 0);
  EXPECT_EQ(df.form, parse_form("x2 dx1 + x1 dx2", c));
  Observable h = alg.hamiltonian(parse_form("-x3 dx1", c), parse_field("@x2", c));
  std::vector<Observable> mixed{h, f};
  EXPECT_TRUE(is_zero(alg.lk(mixed)));
  EXPECT_EQ(alg.lk(mixed).degree, -1);
  std::vector<Observable> missing{h, Observable{0, parse_form("x1 dx2", c), std::nullopt}};
  EXPECT_THROW(alg.lk(missing), Error);
}

TEST(Observables, RejectsOpenForm) {
  Chart c3 = Chart::numbered("x", 3);
  try {
    ObservablesAlgebra(Domain::chart(c3), parse_form("x1 dx2^dx3 + x3 dx1^dx2", c3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
  }
}

TEST(Observables, HamVariantCarriesFields) {
  Chart c = plane();
  ObservablesAlgebra alg(Domain::chart(c), parse_form("dx1^dx2", c), ObservablesVariant::Ham);
  Observable x1 = alg.hamiltonian(parse_form("x1", c), parse_field("@x2", c));
  Observable x1b = alg.hamiltonian(parse_form("x1", c), parse_field("@x2", c));
  EXPECT_FALSE(alg.difference(x1, x1b));
  Observable shifted = x1b;
  shifted.field = parse_field("@x2 + @x1", c);
  EXPECT_TRUE(alg.difference(x1, shifted));
  ObservablesAlgebra linf(Domain::chart(c), parse_form("dx1^dx2", c));
  EXPECT_FALSE(linf.difference(x1, shifted));
}

TEST(Observables, BracketIndependentOfWitness) {
  // Pre-symplectic dx1^dx2 on R^3: d_3 can be added to any Hamiltonian field.
  Chart c = Chart::numbered("x", 3);
  ObservablesAlgebra alg(Domain::chart(c), parse_form("dx1^dx2", c));
  auto rng = test_rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly f = random_poly(3, 3, 3, rng), g = random_poly(3, 3, 3, rng);
    // Hamiltonian fields exist only for functions of x1, x2.
    MultiPoly f12(3), g12(3);
    for (const auto& [e, q] : f.terms())
      if (e[2] == 0) f12.add_term(e, q);
    for (const auto& [e, q] : g.terms())
      if (e[2] == 0) g12.add_term(e, q);
    auto vf = PolyMultiVec::basis(c, std::vector<int>{1}, f12.derivative(0)) +
              PolyMultiVec::basis(c, std::vector<int>{0}, -f12.derivative(1));
    auto vg = PolyMultiVec::basis(c, std::vector<int>{1}, g12.derivative(0)) +
              PolyMultiVec::basis(c, std::vector<int>{0}, -g12.derivative(1));
    auto shift = PolyMultiVec::basis(c, std::vector<int>{2}, random_poly(3, 2, 2, rng));
    Observable a = alg.hamiltonian(PolyForm::scalar(c, f12), vf);
    Observable a2 = alg.hamiltonian(PolyForm::scalar(c, f12), vf + shift);
    Observable b = alg.hamiltonian(PolyForm::scalar(c, g12), vg);
    std::vector<Observable> one{a, b}, two{a2, b};
    EXPECT_EQ(alg.lk(one).form, alg.lk(two).form);
  }
}

TEST(Observables, JacobiatorOnTriples) {
  Chart c = Chart::numbered("x", 3);
  PolyForm w = volume_form(c);
  ObservablesAlgebra alg(Domain::chart(c), w);
  auto rng = test_rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Observable> xs;
    for (int i = 0; i < 3; ++i) {
      // Divergence-free fields are locally Hamiltonian; K iota_v omega provides a primitive
      // since d iota_v omega = L_v omega = 0.
      PolyMultiVec v = random_divergence_free(c, 2, rng);
      PolyForm alpha = -poincare_homotopy(interior(v, w));
      xs.push_back(alg.hamiltonian(alpha, v));
    }
    Observable sum = alg.zero(-1);
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& p : cyc) {
      std::vector<Observable> inner{xs[p[0]], xs[p[1]]};
      std::vector<Observable> outer{alg.lk(inner), xs[p[2]]};
      add_scaled(sum, Rational(1), alg.lk(outer));
    }
    add_scaled(sum, Rational(1), alg.l1(alg.lk(xs)));
    EXPECT_TRUE(sum.form.is_zero()) << to_string(sum.form);
  }
}

TEST(Observables, BracketIdentityOnDivergenceFreeFields) {
  auto rng = test_rng(23);
  for (int n : {3, 4}) {
    Chart c = Chart::numbered("x", n);
    PolyForm w = volume_form(c);
    for (int trial = 0; trial < 10; ++trial) {
      auto v1 = random_divergence_free(c, 2, rng);
      auto v2 = random_divergence_free(c, 2, rng);
      EXPECT_TRUE(bracket_identity_residual(v1, v2, w).is_zero());
    }
  }
}

TEST(Observables, BigIdentity) {
  auto rng = test_rng(24);
  Chart c = Chart::numbered("x", 4);
  PolyForm w = volume_form(c);
  for (int m = 2; m <= 4; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<PolyMultiVec> vs;
      for (int i = 0; i < m; ++i) vs.push_back(random_divergence_free(c, 2, rng));
      EXPECT_TRUE(big_identity_residual(vs, w).is_zero()) << m;
    }
}

TEST(Observables, BigIdentityNeedsLocalHamiltonianFields) {
  Chart c = Chart::numbered("x", 3);
  PolyForm w = volume_form(c);
  std::vector<PolyMultiVec> vs{parse_field("x1 @x1", c), parse_field("@x2", c)};
  EXPECT_FALSE(big_identity_residual(vs, w).is_zero());
}
