// Compares the deterministic fixed-chunk reduction against the plain serial
// reference, in both worker modes, on an integration-like workload.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "anomaly/common.hpp"

namespace {

std::vector<double> make_terms(std::size_t n) {
  std::vector<double> v(n);
  anomaly::SplitMix64 rng(42);
  for (std::size_t i = 0; i < n; ++i) {
    // Oscillating magnitudes exercise the compensation path.
    v[i] = rng.next_symmetric(1.0) * std::exp(10.0 * rng.next_symmetric(1.0));
  }
  return v;
}

const std::vector<double>& terms() {
  static const std::vector<double> v = make_terms(1 << 22);
  return v;
}

double term_at(std::size_t i) {
  const double x = terms()[i];
  return x * std::cos(1e-3 * static_cast<double>(i));
}

void bench_serial_reference(benchmark::State& state) {
  anomaly::set_parallel(false);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anomaly::reduce_sum_serial(n, term_at));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
}

void bench_chunked(benchmark::State& state) {
  anomaly::set_parallel(state.range(1) != 0);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anomaly::reduce_sum(n, term_at));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
  anomaly::set_parallel(false);
}

}  // namespace

BENCHMARK(bench_serial_reference)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK(bench_chunked)
    ->Args({1 << 16, 0})
    ->Args({1 << 20, 0})
    ->Args({1 << 22, 0})
    ->Args({1 << 16, 1})
    ->Args({1 << 20, 1})
    ->Args({1 << 22, 1});

BENCHMARK_MAIN();
