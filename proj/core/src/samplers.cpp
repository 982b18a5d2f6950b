#include "plectic/samplers.hpp"

#include <algorithm>
#include <numeric>

namespace plectic {

namespace {

template <class Tag>
GradedPoly<Tag> random_graded(const Chart& chart, int degree, int max_coeff_degree, Rng& rng, int terms) {
  GradedPoly<Tag> out(chart, degree);
  const int n = chart.size();
  auto subsets = increasing_subsets(n, degree);
  if (subsets.empty()) return out;
  for (int t = 0; t < terms; ++t) {
    const auto& s = subsets[rng.uniform(0, static_cast<int>(subsets.size()) - 1)];
    out += GradedPoly<Tag>::basis(chart, s, random_poly(n, max_coeff_degree, 2, rng));
  }
  return out;
}

}  // namespace

MultiPoly random_poly(int nvars, int max_degree, int terms, Rng& rng) {
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    const int budget = rng.uniform(0, max_degree);
    for (int b = 0; b < budget; ++b) e[rng.uniform(0, nvars - 1)]++;
    p.add_term(e, rng.rational());
  }
  return p;
}

PolyForm random_form(const Chart& chart, int degree, int max_coeff_degree, Rng& rng, int terms) {
  return random_graded<FormTag>(chart, degree, max_coeff_degree, rng, terms);
}

PolyMultiVec random_field(const Chart& chart, int degree, int max_coeff_degree, Rng& rng, int terms) {
  return random_graded<FieldTag>(chart, degree, max_coeff_degree, rng, terms);
}

PolyMultiVec random_divergence_free(const Chart& chart, int max_degree, Rng& rng) {
  const int n = chart.size();
  PolyMultiVec v(chart, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MultiPoly a = random_poly(n, max_degree, 2, rng);
      v += PolyMultiVec::basis(chart, std::vector<int>{i}, a.derivative(j));
      v += PolyMultiVec::basis(chart, std::vector<int>{j}, -a.derivative(i));
    }
  return v;
}

ScalarCochain random_cochain(int dim, int k, Rng& rng) {
  ScalarCochain c(dim, k, Rational(0));
  for (const auto& s : increasing_subsets(dim, k)) c.set(make_index_set(s), rng.rational());
  return c;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng.engine());
  return Permutation(std::move(images));
}

MultilinearTable random_table(int dim, int arity, Rng& rng) {
  MultilinearTable t(dim, arity);
  t.for_each_index([&](std::span<const int> idx) {
    if (rng.coin()) t.at(idx) = rng.rational();
  });
  return t;
}

Matrix random_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, std::vector<Rational>(cols, Rational(0)));
  for (auto& row : m)
    for (auto& x : row)
      if (rng.coin()) x = rng.rational();
  return m;
}

}  // namespace plectic
