// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "bellman/grid.hpp"
#include "bellman/hardy.hpp"

namespace {

using namespace bellman;

std::vector<ParamPoint> scan_points(int n) {
  const auto s2 = grid::linspace(0.3, 0.96, n);
  const auto s1 = grid::linspace(0.02, 0.9, n);
  return grid::rectangular_grid(s2, s1);
}

std::vector<hardy::StepFunction> hardy_samples(const Exponents& e, int n) {
  std::vector<hardy::StepFunction> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(hardy::sample_step(grid::sample_seed(7, static_cast<std::uint64_t>(i)), 2 + i % 7, 1.0, e));
  }
  return out;
}

void BM_ScanSerial(benchmark::State& state) {
  const Exponents e(2.0, 1.5);
  const auto pts = scan_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid::scan_serial(e, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const Exponents e(2.0, 1.5);
  const auto pts = scan_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid::scan_parallel(e, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_VerifySerial(benchmark::State& state) {
  const Exponents e(3.0, 2.0);
  const auto samples = hardy_samples(e, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid::verify_serial(e, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
  const Exponents e(3.0, 2.0);
  const auto samples = hardy_samples(e, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid::verify_parallel(e, samples));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
