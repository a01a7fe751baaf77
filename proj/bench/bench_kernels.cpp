// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "growthlab/kernels.hpp"

using namespace growthlab::kernels;

namespace {

std::vector<double> positive_inputs(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    return x;
}

void BM_PowerSumSerial(benchmark::State& state) {
    const auto x = positive_inputs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(power_sum_serial(x, -1.5));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PowerSumParallel(benchmark::State& state) {
    const auto x = positive_inputs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(power_sum_parallel(x, -1.5));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AllocationSearchSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(random_allocation_search_serial(8, -1.0, static_cast<std::size_t>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AllocationSearchParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(random_allocation_search_parallel(8, -1.0, static_cast<std::size_t>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const std::vector<double> kThresholds{-0.84, -0.52, -1.28, 0.0};
const std::vector<double> kLoadings{0.0, 0.2, 0.4, 0.6, 0.8};

void BM_UnionHitsSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(union_hits_serial(kThresholds, kLoadings, static_cast<std::size_t>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_UnionHitsParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(union_hits_parallel(kThresholds, kLoadings, static_cast<std::size_t>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_PowerSumSerial)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_PowerSumParallel)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_AllocationSearchSerial)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_AllocationSearchParallel)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_UnionHitsSerial)->Range(1 << 12, 1 << 18);
BENCHMARK(BM_UnionHitsParallel)->Range(1 << 12, 1 << 18);

BENCHMARK_MAIN();
