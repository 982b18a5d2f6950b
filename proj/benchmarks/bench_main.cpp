#include <benchmark/benchmark.h>

#include "plectic/coalgebra.hpp"
#include "plectic/expression.hpp"
#include "plectic/moment_map.hpp"
#include "plectic/samplers.hpp"

using namespace plectic;

namespace {

ActionData so_action(int n) { return fundamental_fields_linear(LinearAction(so_algebra(n), so_matrices(n))); }

void BM_MomentFromExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = so_action(n);
  Domain d = Domain::chart(a.chart());
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  for (auto _ : state) benchmark::DoNotOptimize(moment_from_extension(ext, a, d));
}
BENCHMARK(BM_MomentFromExtension)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MomentFromCartan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = so_action(n);
  Domain d = Domain::chart(a.chart());
  auto ext = extension_from_exact(volume_primitive(a.chart()), a);
  for (auto _ : state) benchmark::DoNotOptimize(moment_from_cartan(ext, a, d));
}
BENCHMARK(BM_MomentFromCartan)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = so_action(n);
  Domain d = Domain::chart(a.chart());
  auto m = moment_from_extension(extension_from_exact(volume_primitive(a.chart()), a), a, d);
  for (auto _ : state) benchmark::DoNotOptimize(verify_moment(m, d));
}
BENCHMARK(BM_VerifyMoment)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SphereCartan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = sphere_two_step(n, 20);
  Domain d = Domain::level_set(s.sphere);
  for (auto _ : state) benchmark::DoNotOptimize(moment_from_cartan(s.extension, s.action, d));
}
BENCHMARK(BM_SphereCartan)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GeneralizedJacobi(benchmark::State& state) {
  ScalarCochain c(3, 3, Rational(0));
  c.set(make_index_set(std::vector<int>{0, 1, 2}), Rational(1));
  auto t = central_extension(su2_algebra(), c, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_generalized_jacobi(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GeneralizedJacobi)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_ChainMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = so_algebra(4);
  Rng rng(7);
  ScalarCochain c(6, n + 1, Rational(0));
  auto b = random_cochain(6, n, rng);
  auto c2 = ce_differential(g, b);
  auto m = cocycle_quasi_iso(g, c, c2, b, n);
  auto source = central_extension(g, c, n);
  auto target = central_extension(g, c2, n);
  auto f = coalgebra_map(source.space(), m, target.space());
  Codifferential q(source), q2(target);
  for (auto _ : state) benchmark::DoNotOptimize(check_chain_map(f, q, q2, n + 2));
}
BENCHMARK(BM_ChainMap)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ExteriorDerivative(benchmark::State& state) {
  Chart c = Chart::numbered("x", 6);
  Rng rng(3);
  auto a = random_form(c, 3, static_cast<int>(state.range(0)), rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_d(a));
}
BENCHMARK(BM_ExteriorDerivative)->DenseRange(2, 6, 2);

void BM_ParseForm(benchmark::State& state) {
  Chart c = Chart::numbered("x", 4);
  const std::string text = "1/3 x1^2*x2 dx1^dx3 - 5/7 x3*x4^3 dx2^dx4 + x1*x2*x3*x4 dx1^dx2 - 2 dx3^dx4";
  for (auto _ : state) benchmark::DoNotOptimize(parse_form(text, c));
}
BENCHMARK(BM_ParseForm);

}  // namespace

BENCHMARK_MAIN();
