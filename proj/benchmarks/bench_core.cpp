#include <benchmark/benchmark.h>

#include <cstdint>

#include "groverphase/groverphase.hpp"

namespace {

using namespace grover;

const ProblemConfig kConfig(100, kPi / 3.0);

void BM_BuildIterationMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_iteration_matrix(kConfig));
  }
}
BENCHMARK(BM_BuildIterationMatrix);

void BM_Step(benchmark::State& state) {
  const IterationMatrix m = build_iteration_matrix(kConfig);
  ReducedState s = uniform_initial_state(100);
  for (auto _ : state) {
    s = step(s, m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Step);

void BM_Iterate(benchmark::State& state) {
  const std::size_t j_max = static_cast<std::size_t>(state.range(0));
  const ReducedState initial = uniform_initial_state(100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(kConfig, initial, j_max));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Iterate)->Range(64, 1 << 14)->Complexity(benchmark::oN);

void BM_Diagonalize(benchmark::State& state) {
  const IterationMatrix m = build_iteration_matrix(kConfig);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonalize(m, kConfig));
  }
}
BENCHMARK(BM_Diagonalize);

// The closed form reaches any application count in constant time; compare
// against BM_Iterate, which is linear in the count.
void BM_ClosedForm(benchmark::State& state) {
  const std::size_t j = static_cast<std::size_t>(state.range(0));
  const ReducedState initial = uniform_initial_state(100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_state(kConfig, initial, j));
  }
}
BENCHMARK(BM_ClosedForm)->Range(64, 1 << 14);

void BM_FullIteration(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const ProblemConfig config(n, kPi / 3.0);
  FullState psi = lift(uniform_initial_state(n), config);
  for (auto _ : state) {
    psi = apply_diffusion(apply_phase_oracle(std::move(psi), config.theta()));
    benchmark::DoNotOptimize(psi.amplitudes.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FullIteration)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

void BM_ThetaSweep(benchmark::State& state) {
  const std::size_t points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_sweep(100, 4, points));
  }
}
BENCHMARK(BM_ThetaSweep)->Arg(250)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
