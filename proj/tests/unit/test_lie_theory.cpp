#include <gtest/gtest.h>

#include "plectic/action.hpp"
#include "plectic/cochain.hpp"
#include "plectic/error.hpp"
#include "plectic/invariant_poly.hpp"
#include "support.hpp"

using namespace plectic;
using plectic::testing::random_cochain;
using plectic::testing::test_rng;

namespace {

ScalarCochain basis_cochain(int dim, std::vector<int> idx, const Rational& v = 1) {
  ScalarCochain c(dim, static_cast<int>(idx.size()), Rational(0));
  c.set(make_index_set(idx), v);
  return c;
}

}  // namespace

TEST(LieAlgebra, JacobiCheckedAtConstruction) {
  EXPECT_NO_THROW(LieAlgebra({"e1", "e2", "e3"}, std::vector<BracketEntry>{{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}},
                                                                          {2, 0, {0, 1, 0}}}));
  try {
    LieAlgebra({"e1", "e2", "e3"}, std::vector<BracketEntry>{{0, 1, {1, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  for (const auto& g : {su2_algebra(), so_algebra(3), so_algebra(4), heisenberg_algebra(), abelian_algebra(1),
                        abelian_algebra(5)})
    EXPECT_FALSE(g.constants().jacobi_violation());
  EXPECT_TRUE(abelian_algebra(3).is_abelian());
}

TEST(LinearActionTest, RepresentationChecked) {
  EXPECT_NO_THROW(LinearAction(so_algebra(3), so_matrices(3)));
  auto mats = so_matrices(3);
  mats[0][0][0] = 1;
  EXPECT_THROW(LinearAction(so_algebra(3), mats), Error);
}

TEST(CeDifferential, Examples) {
  auto g = su2_algebra();
  auto d = ce_differential(g, basis_cochain(3, {2}));
  EXPECT_EQ(d, basis_cochain(3, {0, 1}, Rational(-1)));
  auto rng = test_rng(41);
  auto a = abelian_algebra(3);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(ce_differential(a, random_cochain(3, k, rng)).is_zero());
}

TEST(CeDifferential, SquaresToZero) {
  auto rng = test_rng(42);
  for (const auto& g : {su2_algebra(), heisenberg_algebra(), solvable4_algebra(), so_algebra(3)})
    for (int k = 0; k <= g.dim(); ++k)
      for (int trial = 0; trial < 5; ++trial)
        EXPECT_TRUE(ce_differential(g, ce_differential(g, random_cochain(g.dim(), k, rng))).is_zero());
}

TEST(Coboundary, Examples) {
  auto g = su2_algebra();
  EXPECT_TRUE(is_ce_coboundary(g, ScalarCochain(3, 2, Rational(0))));
  EXPECT_FALSE(is_ce_coboundary(abelian_algebra(2), basis_cochain(2, {0, 1})));
  // The Cartan 3-cocycle generates H^3(su(2)).
  EXPECT_FALSE(is_ce_coboundary(g, basis_cochain(3, {0, 1, 2})));
  auto b = is_ce_coboundary(g, basis_cochain(3, {0, 1}, Rational(-1)));
  ASSERT_TRUE(b);
  EXPECT_EQ(ce_differential(g, *b), basis_cochain(3, {0, 1}, Rational(-1)));
  try {
    is_ce_coboundary(heisenberg_algebra(), basis_cochain(3, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocycle);
  }
}

TEST(Coboundary, RandomCoboundariesAreRecognized) {
  auto rng = test_rng(43);
  for (const auto& g : {so_algebra(4), solvable4_algebra(), heisenberg_algebra()})
    for (int k = 1; k < g.dim(); ++k) {
      auto c = ce_differential(g, random_cochain(g.dim(), k, rng));
      auto b = is_ce_coboundary(g, c);
      ASSERT_TRUE(b);
      EXPECT_EQ(ce_differential(g, *b), c);
    }
}

TEST(SymTrace, Su2Values) {
  EXPECT_TRUE(symtrace_poly(2, 3).is_zero());
  auto q4 = symtrace_poly(2, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(q4.at({i, j, j, j}), i == j ? make_rational(-1, 8) : Rational(0)) << i << j;
  auto q2 = symtrace_poly(2, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) EXPECT_GT(q2.at({i, i}), 0);
      else EXPECT_EQ(q2.at({i, j}), 0);
    }
}

TEST(SymTrace, InvarianceUpToSix) {
  auto g = su_algebra(2);
  for (int k = 1; k <= 6; ++k) EXPECT_FALSE(invariance_violation(symtrace_poly(2, k), g)) << k;
  EXPECT_FALSE(invariance_violation(symtrace_poly(3, 3), su_algebra(3)));
}

TEST(SymTrace, Nondegeneracy) {
  EXPECT_TRUE(is_nondegenerate(symtrace_poly(2, 2)));
  EXPECT_FALSE(is_nondegenerate(symtrace_poly(2, 3)));
  EXPECT_EQ(degeneracy_kernel(symtrace_poly(2, 3)).size(), 3u);
  EXPECT_TRUE(is_nondegenerate(symtrace_poly(2, 4)));
  EXPECT_FALSE(is_nondegenerate(killing_form(heisenberg_algebra())));
}

TEST(SymTrace, NoninvariantFormDetected) {
  SymmetricForm q(3, 2);
  q.set({0, 0}, Rational(1));
  EXPECT_TRUE(invariance_violation(q, su2_algebra()));
}

TEST(Perfect, Decomposition) {
  auto g = su2_algebra();
  auto pairs = solve_perfect_decomposition(g, basis_vector(3, 2));
  LieVector sum(3, Rational(0));
  for (const auto& [a, b] : pairs) add_scaled(sum, Rational(1), g.bracket(a, b));
  EXPECT_EQ(sum, basis_vector(3, 2));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].first, basis_vector(3, 0));
  EXPECT_EQ(pairs[0].second, basis_vector(3, 1));
  EXPECT_TRUE(solve_perfect_decomposition(g, LieVector(3, Rational(0))).empty());
  try {
    solve_perfect_decomposition(abelian_algebra(2), basis_vector(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPerfect);
  }
  EXPECT_TRUE(is_perfect(so_algebra(4)));
  EXPECT_FALSE(is_perfect(heisenberg_algebra()));
}
