#include <gtest/gtest.h>

#include "plectic/coalgebra.hpp"
#include "support.hpp"

using namespace plectic;
using plectic::testing::random_cochain;
using plectic::testing::test_rng;

namespace {

const std::vector<int> kMixed{-1, -2, 0, -1};

ScalarCochain cartan_cocycle_su2() {
  ScalarCochain c(3, 3, Rational(0));
  c.set(make_index_set(std::vector<int>{0, 1, 2}), Rational(1));
  return c;
}

LieAlgebra aff2_algebra() { return LieAlgebra({"a", "b"}, std::vector<BracketEntry>{{0, 1, LieVector{0, 1}}}); }

BracketTable perturbed_su2() {
  BracketTable t(GradedSpace{{"e1", "e2", "e3"}, {0, 0, 0}}, 1);
  t.set({0, 1}, Element{1, 0, 1});
  t.set({1, 2}, Element{1, 0, 0});
  t.set({2, 0}, Element{0, 1, 0});
  return t;
}

TensorElement flatten_left(const Word& w, std::span<const int> deg) {
  TensorElement out;
  for (const auto& [key, c] : reduced_coproduct(w, deg))
    for (const auto& [inner, d] : reduced_coproduct(key[0], deg)) {
      auto& slot = out[{inner[0], inner[1], key[1]}];
      slot += c * d;
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

TensorElement flatten_right(const Word& w, std::span<const int> deg) {
  TensorElement out;
  for (const auto& [key, c] : reduced_coproduct(w, deg))
    for (const auto& [inner, d] : reduced_coproduct(key[1], deg)) {
      auto& slot = out[{key[0], inner[0], inner[1]}];
      slot += c * d;
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

// g -> central extension by -delta b: f_1 = inclusion, f_n = b r (f_1 carries b when n = 1).
TableMorphism coboundary_morphism(const LieAlgebra& g, const ScalarCochain& b, int n) {
  const int d = g.dim();
  TableMorphism m;
  m.n = n;
  for (int k = 1; k <= n; ++k) m.f.emplace_back(d, k, Element(d + 1, Rational(0)));
  for (int i = 0; i < d; ++i) {
    Element v(d + 1, Rational(0));
    v[i] = 1;
    m.f[0].set(make_index_set(std::vector<int>{i}), v);
  }
  for (const auto& [s, v] : b.values()) m.f[n - 1].add(s, v, basis_vector(d + 1, d));
  return m;
}

ScalarCochain negated_differential(const LieAlgebra& g, const ScalarCochain& b) {
  auto db = ce_differential(g, b);
  ScalarCochain out(g.dim(), db.degree(), Rational(0));
  for (const auto& [s, v] : db.values()) out.set(s, -v);
  return out;
}

// Keeps f_k in degree 1-k: f_1 lands in g, f_n on the central generator.
void perturb(TableMorphism& m, Rng& rng, int target_dim) {
  int k = rng.uniform(0, 1) ? m.n : 1;
  if (k > m.f[0].dim()) k = 1;
  const int d = m.f[k - 1].dim();
  auto subsets = increasing_subsets(d, k);
  const auto& s = subsets[rng.uniform(0, static_cast<int>(subsets.size()) - 1)];
  const int slot = k == m.n ? target_dim - 1 : rng.uniform(0, target_dim - 2);
  m.f[k - 1].add(make_index_set(s), Rational(1), basis_vector(target_dim, slot));
}

}  // namespace

TEST(Coproduct, SingleAndPair) {
  EXPECT_TRUE(reduced_coproduct({0}, kMixed).empty());
  // u_0 u_3 with both odd: Delta = u_0 (x) u_3 - u_3 (x) u_0.
  auto d = reduced_coproduct({0, 3}, kMixed);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ((d.at({{0}, {3}})), Rational(1));
  EXPECT_EQ((d.at({{3}, {0}})), Rational(-1));
  // odd times even commutes.
  auto e = reduced_coproduct({0, 1}, kMixed);
  EXPECT_EQ((e.at({{1}, {0}})), Rational(1));
  // even square: 2 u_1 (x) u_1.
  auto f = reduced_coproduct({1, 1}, kMixed);
  EXPECT_EQ((f.at({{1}, {1}})), Rational(2));
}

TEST(Coproduct, KoszulSort) {
  Word w{3, 0};
  EXPECT_EQ(koszul_sort(w, kMixed), -1);
  EXPECT_EQ(w, (Word{0, 3}));
  w = {0, 0};
  EXPECT_EQ(koszul_sort(w, kMixed), 0);
  w = {1, 1, 2};
  EXPECT_EQ(koszul_sort(w, kMixed), 1);
}

TEST(Coproduct, Coassociative) {
  for (const auto& w : canonical_words(kMixed, 4)) {
    auto left = flatten_left(w, kMixed);
    EXPECT_EQ(left, flatten_right(w, kMixed)) << format_word(w, GradedSpace{{"a", "b", "c", "d"}, {0, -1, 1, 0}});
    EXPECT_EQ(left, reduced_diagonal(w, 2, kMixed));
  }
}

TEST(Coproduct, DiagonalKernelIsShortWords) {
  for (const auto& w : canonical_words(kMixed, 4))
    for (int p = 1; p <= 4; ++p)
      EXPECT_EQ(reduced_diagonal(w, p, kMixed).empty(), static_cast<int>(w.size()) <= p);
  auto id = reduced_diagonal({0, 1, 3}, 0, kMixed);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id.begin()->second, Rational(1));
}

TEST(Coproduct, FullDiagonalSumsOverPermutations) {
  // Distinct odd generators: every ordering appears once, with its sign.
  auto d = reduced_diagonal({0, 3}, 1, kMixed);
  auto full = reduced_diagonal({0, 1, 3}, 2, kMixed);
  EXPECT_EQ(full.size(), 6u);
  EXPECT_EQ((full.at({{3}, {1}, {0}})), Rational(-1));
  EXPECT_EQ(d.size(), 2u);
}

TEST(Codifferential, ShiftSigns) {
  EXPECT_EQ(shift_sign(std::vector<int>{-1}), 1);
  EXPECT_EQ(shift_sign(std::vector<int>{-1, -1}), 1);
  EXPECT_EQ(shift_sign(std::vector<int>{-2, -1}), -1);
  EXPECT_EQ(shift_sign(std::vector<int>{-1, -1, -1}), 1);
  // D^1_2(u_x, u_y) = [x, y] for x, y in degree 0.
  Codifferential q(lie_as_linfty(su2_algebra()));
  EXPECT_EQ(q.projection({0, 1}), (Element{0, 0, 1}));
  EXPECT_EQ(q.projection({1, 0}), (Element{0, 0, -1}));
}

TEST(Codifferential, AbelianIsZero) {
  Codifferential q(lie_as_linfty(abelian_algebra(3)));
  for (const auto& w : canonical_words(q.degrees(), 4)) EXPECT_TRUE(q.apply(w).empty());
}

TEST(Codifferential, SquaresToZero) {
  for (const auto& g : {su2_algebra(), heisenberg_algebra(), aff2_algebra(), solvable4_algebra()})
    EXPECT_FALSE(square_violation(Codifferential(lie_as_linfty(g)), 4));
  Codifferential string(central_extension(su2_algebra(), cartan_cocycle_su2(), 2));
  auto v = square_violation(string, 5);
  EXPECT_FALSE(v) << *v;
}

TEST(Codifferential, SquareDetectsJacobiFailure) {
  auto t = perturbed_su2();
  ASSERT_FALSE(check_generalized_jacobi(t, 3).ok());
  auto v = square_violation(Codifferential(t), 3);
  ASSERT_TRUE(v);
  EXPECT_NE(v->find("e1.e2.e3"), std::string::npos);
  EXPECT_FALSE(square_violation(Codifferential(t), 2));
}

TEST(CoalgebraMapTest, StrictProducts) {
  auto rng = test_rng(31);
  GradedSpace src{{"a", "b", "c"}, {0, 0, -1}};
  GradedSpace dst{{"x", "y", "z"}, {0, 0, -1}};
  std::vector<Element> images{{rng.rational(), rng.rational(), 0},
                              {rng.rational(), rng.rational(), 0},
                              {0, 0, rng.rational()}};
  auto f = strict_coalgebra_map(src, dst, images);
  for (const auto& w : canonical_words(f.source_degrees(), 4)) {
    const int n = static_cast<int>(w.size());
    SymElement expected;
    std::vector<Element> factors;
    for (int g : w) factors.push_back(images[g]);
    // expand the product directly
    std::vector<int> pick(n, 0);
    auto rec = [&](auto&& self, int pos, Rational c, Word gens) -> void {
      if (pos == n) {
        add_word(expected, gens, c, f.target_degrees());
        return;
      }
      for (int t = 0; t < 3; ++t) {
        if (is_zero(factors[pos][t])) continue;
        Word next = gens;
        next.push_back(t);
        self(self, pos + 1, c * factors[pos][t], next);
      }
    };
    rec(rec, 0, Rational(1), {});
    EXPECT_EQ(f.component(w, n), expected);
    for (int p = 1; p < n; ++p) EXPECT_TRUE(f.component(w, p).empty());
    EXPECT_TRUE(f.component(w, n + 1).empty());
  }
}

TEST(CoalgebraMapTest, ComorphismLaw) {
  auto rng = test_rng(32);
  GradedSpace src{{"a", "b", "c"}, {0, 0, -1}};
  GradedSpace dst{{"x", "y", "r"}, {0, 0, -1}};
  auto src_deg = shifted_degrees(src);
  for (int trial = 0; trial < 5; ++trial) {
    CoalgebraMap f(src, dst);
    for (const auto& w : canonical_words(src_deg, 3)) {
      int total = 0;
      for (int g : w) total += src_deg[g];
      // F^1 has degree 0: land in the generators of matching shifted degree.
      Element v(3, Rational(0));
      if (total == -1) {
        v[0] = rng.rational();
        v[1] = rng.rational();
      } else if (total == -2) {
        v[2] = rng.rational();
      }
      f.set(w, v);
    }
    auto bad = comorphism_violation(f, 4);
    EXPECT_FALSE(bad) << *bad;
  }
}

TEST(CoalgebraMapTest, SetUsesKoszulOrder) {
  GradedSpace s{{"a", "b"}, {0, -1}};
  CoalgebraMap f(s, s);
  f.set({1, 0}, Element{1, 0});
  EXPECT_EQ(f.projection({0, 1}), (Element{1, 0}));
  GradedSpace odd{{"a", "b"}, {0, 0}};
  CoalgebraMap g(odd, odd);
  g.set({1, 0}, Element{1, 0});
  EXPECT_EQ(g.projection({0, 1}), (Element{-1, 0}));
  EXPECT_THROW(g.set({0, 0}, Element{1, 0}), Error);
}

TEST(ChainMap, Identity) {
  for (const auto& t : {lie_as_linfty(su2_algebra()), central_extension(su2_algebra(), cartan_cocycle_su2(), 2)}) {
    std::vector<Element> images;
    for (int i = 0; i < t.dim(); ++i) images.push_back(basis_vector(t.dim(), i));
    Codifferential q(t);
    auto f = strict_coalgebra_map(t.space(), t.space(), images);
    EXPECT_TRUE(check_chain_map(f, q, q, 4).ok());
  }
}

TEST(ChainMap, MatchesMorphismEquations) {
  auto rng = test_rng(33);
  const std::vector<LieAlgebra> algebras{su2_algebra(), heisenberg_algebra(), aff2_algebra(), abelian_algebra(2)};
  int passes = 0, failures = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const auto& g = algebras[trial % algebras.size()];
    const int n = 1 + (trial / 2) % 3;
    auto b = random_cochain(g.dim(), n, rng);
    auto target = central_extension(g, negated_differential(g, b), n);
    auto m = coboundary_morphism(g, b, n);
    if (trial % 3 == 2) perturb(m, rng, target.dim());
    const bool direct = check_lie_to_linfty_morphism(g, target, m).ok();
    auto source = lie_as_linfty(g);
    auto f = coalgebra_map(source.space(), m, target.space());
    auto rep = check_chain_map(f, Codifferential(source), Codifferential(target), n + 2);
    EXPECT_EQ(direct, rep.ok()) << "trial " << trial << " n=" << n;
    EXPECT_FALSE(comorphism_violation(f, 3));
    (direct ? passes : failures)++;
  }
  EXPECT_GT(passes, 0);
  EXPECT_GT(failures, 0);
}

TEST(ChainMap, MatchesExtensionMorphism) {
  auto rng = test_rng(34);
  auto g = su2_algebra();
  auto c = cartan_cocycle_su2();
  int passes = 0, failures = 0;
  for (int trial = 0; trial < 6; ++trial) {
    auto b = random_cochain(3, 2, rng);
    auto target = central_extension(g, c, 2);
    auto m = cocycle_quasi_iso(g, c, c, b, 2);
    if (trial % 2 == 1) perturb(m, rng, target.dim());
    if (trial == 4) m.central = Element{0, 0, 0, 2};
    const bool direct = check_ext_morphism(g, c, target, m).ok();
    auto source = central_extension(g, c, 2);
    auto f = coalgebra_map(source.space(), m, target.space());
    auto rep = check_chain_map(f, Codifferential(source), Codifferential(target), 4);
    EXPECT_EQ(direct, rep.ok()) << "trial " << trial;
    (direct ? passes : failures)++;
  }
  EXPECT_GT(passes, 0);
  EXPECT_GT(failures, 0);
}

TEST(ChainMap, QuasiIsoOnSo4) {
  auto g = so_algebra(4);
  auto rng = test_rng(35);
  for (int n : {1, 2}) {
    ScalarCochain c(6, n + 1, Rational(0));
    auto b = random_cochain(6, n, rng);
    auto c2 = ce_differential(g, b);
    auto m = cocycle_quasi_iso(g, c, c2, b, n);
    auto source = central_extension(g, c, n);
    auto target = central_extension(g, c2, n);
    ASSERT_TRUE(check_ext_morphism(g, c, target, m).ok());
    auto f = coalgebra_map(source.space(), m, target.space());
    auto rep = check_chain_map(f, Codifferential(source), Codifferential(target), n + 2);
    EXPECT_TRUE(rep.ok()) << rep.first_failure()->name << " " << rep.first_failure()->witness;
  }
}
