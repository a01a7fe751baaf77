#pragma once

// Data-parallel kernels. Each kernel has a serial reference used by the tests
// and an OpenMP version used by the library. Work is split into a fixed
// number of blocks or shards so results depend on the seed and shard count,
// never on the thread count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <span>
#include <vector>

namespace growthlab::kernels {

inline constexpr std::size_t kDefaultShards = 64;

/// Engine for one shard of a seeded Monte Carlo run.
std::mt19937_64 shard_engine(std::uint64_t seed, std::size_t shard);

/// Number of samples assigned to `shard` when `total` is split `shards` ways.
std::size_t shard_size(std::size_t total, std::size_t shards, std::size_t shard);

// Sum of x_i^p over the span. Inputs must be positive or +inf.
double power_sum_serial(std::span<const double> x, double p);
double power_sum_parallel(std::span<const double> x, double p);

struct AllocationSearch {
    double best_ratio; // best sampled output / equal-split output
    std::size_t samples;
};

/// Draws random feasible allocations of a unit-mean budget over `n_tasks`
/// and reports the best CES output found relative to the equal split.
AllocationSearch random_allocation_search_serial(std::size_t n_tasks, double rho,
                                                 std::size_t samples, std::uint64_t seed,
                                                 std::size_t shards = kDefaultShards);
AllocationSearch random_allocation_search_parallel(std::size_t n_tasks, double rho,
                                                   std::size_t samples, std::uint64_t seed,
                                                   std::size_t shards = kDefaultShards);

struct UnionHits {
    std::vector<std::uint64_t> hits; // one count per loading, same order
    std::uint64_t samples = 0;
};

/// One-factor Gaussian threshold model. Event i fires iff
/// sqrt(w) Z + sqrt(1 - w) Z_i < thresholds[i]; counts draws where at least
/// one event fires, for every loading w using the same draws.
UnionHits union_hits_serial(std::span<const double> thresholds, std::span<const double> loadings,
                            std::size_t samples, std::uint64_t seed,
                            std::size_t shards = kDefaultShards);
UnionHits union_hits_parallel(std::span<const double> thresholds,
                              std::span<const double> loadings, std::size_t samples,
                              std::uint64_t seed, std::size_t shards = kDefaultShards);

/// Runs fn(i) for i in [0, n) across threads. The first exception thrown by
/// any iteration is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(growthlab_parallel_for)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace growthlab::kernels
