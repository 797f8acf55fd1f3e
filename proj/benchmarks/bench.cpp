#include <benchmark/benchmark.h>

#include "hyperco/hyperco.hpp"

using namespace hyperco;

namespace {

PairedSamples gaussian_fixture(int n) {
  Rng rng(1);
  VectorXd x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.normal();
    y[i] = 0.8 * x[i] + 0.6 * rng.normal();
  }
  return PairedSamples(std::move(x), std::move(y));
}

void bm_ratio_matrix(benchmark::State& state) {
  auto s = gaussian_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_ratio_matrix(s, {}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_ratio_matrix)->Arg(100)->Arg(320)->Arg(1000)->Complexity();

void bm_objective_gradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = gaussian_fixture(n);
  RatioMatrix a = estimate_ratio_matrix(s, {});
  Rng rng(2);
  VectorXd w0(n);
  for (int i = 0; i < n; ++i) w0[i] = 1.0 + rng.normal(0.0, 0.1);
  WeightVector w = project(w0);
  for (auto _ : state) benchmark::DoNotOptimize(gradient(w, a));
}
BENCHMARK(bm_objective_gradient)->Arg(320)->Arg(1000);

void bm_estimate_full(benchmark::State& state) {
  auto s = gaussian_fixture(static_cast<int>(state.range(0)));
  OptimizerConfig opt;
  opt.restarts = 2;  // keep the benchmark loop tolerable
  for (auto _ : state) benchmark::DoNotOptimize(estimate_hc(s, {}, opt));
}
BENCHMARK(bm_estimate_full)->Arg(100)->Arg(320)->Unit(benchmark::kMillisecond);

void bm_oracle(benchmark::State& state) {
  Rng rng(3);
  MatrixXd p(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) = 0.05 + rng.uniform();
  p /= p.sum();
  DiscreteJoint joint(p);
  for (auto _ : state) benchmark::DoNotOptimize(s_exact(joint));
  state.SetLabel("k=3");
}
BENCHMARK(bm_oracle)->Unit(benchmark::kMillisecond);

void bm_dcor(benchmark::State& state) {
  auto s = gaussian_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcor(s));
}
BENCHMARK(bm_dcor)->Arg(320)->Arg(1000);

void bm_mic(benchmark::State& state) {
  auto s = gaussian_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mic(s));
}
BENCHMARK(bm_mic)->Arg(320)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
