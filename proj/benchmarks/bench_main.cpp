#include <benchmark/benchmark.h>

#include "clhopf/hopf_analysis.hpp"

using namespace clhopf;

namespace {

FormPair<Rational> sample_pair(int n) {
  SeededRng rng(kDefaultSeed);
  return {random_form(rng, n, FormRole::Scalar), random_form(rng, n, FormRole::Coscalar)};
}

void BM_BuildContext(benchmark::State& state) {
  const auto [eta, xi] = sample_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_context(eta, xi));
}
BENCHMARK(BM_BuildContext)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_AntipodeRational(benchmark::State& state) {
  const auto [eta, xi] = sample_pair(static_cast<int>(state.range(0)));
  const auto ctx = build_context(eta, xi);
  for (auto _ : state) benchmark::DoNotOptimize(solve_antipode(ctx));
}
BENCHMARK(BM_AntipodeRational)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_AntipodeSymbolic(benchmark::State& state) {
  const auto [eta, xi] = parametrized_forms();
  const auto ctx = build_context(eta, xi);
  for (auto _ : state) benchmark::DoNotOptimize(solve_antipode(ctx));
}
BENCHMARK(BM_AntipodeSymbolic)->Unit(benchmark::kMillisecond);

void BM_CrossingN2(benchmark::State& state) {
  const auto [eta, xi] = antisymmetric_forms(Rational(1, 2), Rational(3));
  const auto ctx = build_context(eta, xi);
  for (auto _ : state) benchmark::DoNotOptimize(build_crossing(ctx));
}
BENCHMARK(BM_CrossingN2)->Unit(benchmark::kMillisecond);

void BM_DetRational(benchmark::State& state) {
  SeededRng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  RingMatrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DetRational)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_DetSymbolic(benchmark::State& state) {
  const auto [eta, xi] = parametrized_forms();
  const auto big = kronecker(eta.matrix(), xi.matrix());  // 4 x 4 over Q[r..z]
  for (auto _ : state) benchmark::DoNotOptimize(det(big));
}
BENCHMARK(BM_DetSymbolic)->Unit(benchmark::kMicrosecond);

void BM_MinPolyCrossing(benchmark::State& state) {
  const auto [eta, xi] = antisymmetric_forms(Rational(1, 2), Rational(3));
  const auto sigma = build_crossing(build_context(eta, xi)).sigma;
  for (auto _ : state) benchmark::DoNotOptimize(min_poly(sigma));
}
BENCHMARK(BM_MinPolyCrossing)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
