#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "citeimpact/kernels.hpp"

using namespace citeimpact;

namespace {

std::vector<std::int64_t> citations(std::size_t n) {
  std::mt19937_64 rng(1);
  std::lognormal_distribution<double> d(0.5, 1.2);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = static_cast<std::int64_t>(d(rng));
  return v;
}

std::vector<double> reals(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <auto Kernel>
void BM_Midrank(benchmark::State& state) {
  const auto v = citations(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(v.size());
  for (auto _ : state) {
    Kernel(v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_PercentToZ(benchmark::State& state) {
  std::vector<double> pct(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < pct.size(); ++i) pct[i] = 100.0 * (i + 0.5) / pct.size();
  std::vector<double> out(pct.size());
  for (auto _ : state) {
    Kernel(pct, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_PairCounts(benchmark::State& state) {
  const auto x = reals(static_cast<std::size_t>(state.range(0)), 1);
  const auto y = reals(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, y));
}

template <auto Kernel>
void BM_Permutation(benchmark::State& state) {
  const auto x = reals(11, 3);
  const auto y = reals(11, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x, y, 20, state.range(0), 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Midrank<kernels::midrank_percentiles_serial>)->Name("midrank/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_Midrank<kernels::midrank_percentiles_parallel>)->Name("midrank/omp")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_PercentToZ<kernels::percent_to_z_serial>)->Name("percent_to_z/serial")->Arg(1 << 18);
BENCHMARK(BM_PercentToZ<kernels::percent_to_z_parallel>)->Name("percent_to_z/omp")->Arg(1 << 18);
BENCHMARK(BM_PairCounts<kernels::pair_counts_serial>)->Name("pair_counts/serial")->Arg(1000)->Arg(5000);
BENCHMARK(BM_PairCounts<kernels::pair_counts_parallel>)->Name("pair_counts/omp")->Arg(1000)->Arg(5000);
BENCHMARK(BM_Permutation<kernels::permutation_exceedances_serial>)->Name("permutation/serial")->Arg(100000);
BENCHMARK(BM_Permutation<kernels::permutation_exceedances_parallel>)->Name("permutation/omp")->Arg(100000);
BENCHMARK_MAIN();
