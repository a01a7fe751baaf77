#include "growthlab/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "growthlab/error.hpp"

namespace growthlab::kernels {

namespace {

constexpr std::size_t kBlock = 4096;

double block_power_sum(std::span<const double> x, double p, std::size_t block) {
    const std::size_t begin = block * kBlock;
    const std::size_t end = std::min(x.size(), begin + kBlock);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += std::pow(x[i], p);
    return s;
}

double ces_ratio(std::span<const double> alloc, double rho) {
    double s = 0.0;
    for (double v : alloc) s += std::pow(v, rho);
    return std::pow(s / static_cast<double>(alloc.size()), 1.0 / rho);
}

// Samples for one shard: alternately a uniform draw from the simplex and a
// small multiplicative perturbation of the equal split. Budget mean is 1.
double allocation_shard(std::size_t n_tasks, double rho, std::size_t count, std::uint64_t seed,
                        std::size_t shard) {
    auto engine = shard_engine(seed, shard);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<double> alloc(n_tasks);
    double best = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        double total = 0.0;
        for (auto& v : alloc) {
            v = (k % 2 == 0) ? expo(engine) : 1.0 + jitter(engine);
            total += v;
        }
        for (auto& v : alloc) v *= static_cast<double>(n_tasks) / total;
        best = std::max(best, ces_ratio(alloc, rho));
    }
    return best;
}

struct Thresholds {
    std::vector<double> common;     // sqrt(w)
    std::vector<double> idiosyncratic; // sqrt(1 - w)
};

Thresholds loadings_to_weights(std::span<const double> loadings) {
    Thresholds w;
    for (double l : loadings) {
        require(l >= 0.0 && l < 1.0, "union_hits: loading outside [0,1)");
        w.common.push_back(std::sqrt(l));
        w.idiosyncratic.push_back(std::sqrt(1.0 - l));
    }
    return w;
}

void union_shard(std::span<const double> thresholds, const Thresholds& w, std::size_t count,
                 std::uint64_t seed, std::size_t shard, std::span<std::uint64_t> hits) {
    auto engine = shard_engine(seed, shard);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> z(thresholds.size());
    for (std::size_t k = 0; k < count; ++k) {
        const double common = normal(engine);
        for (auto& v : z) v = normal(engine);
        for (std::size_t j = 0; j < w.common.size(); ++j) {
            const double shared = w.common[j] * common;
            for (std::size_t i = 0; i < z.size(); ++i) {
                if (shared + w.idiosyncratic[j] * z[i] < thresholds[i]) {
                    ++hits[j];
                    break;
                }
            }
        }
    }
}

} // namespace

std::mt19937_64 shard_engine(std::uint64_t seed, std::size_t shard) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
    return std::mt19937_64(seq);
}

std::size_t shard_size(std::size_t total, std::size_t shards, std::size_t shard) {
    return total / shards + (shard < total % shards ? 1 : 0);
}

double power_sum_serial(std::span<const double> x, double p) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, p);
    return s;
}

double power_sum_parallel(std::span<const double> x, double p) {
    const std::size_t blocks = (x.size() + kBlock - 1) / kBlock;
    if (blocks <= 1) return power_sum_serial(x, p);
    std::vector<double> partial(blocks);
    parallel_for(blocks, [&](std::size_t b) { partial[b] = block_power_sum(x, p, b); });
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

AllocationSearch random_allocation_search_serial(std::size_t n_tasks, double rho,
                                                 std::size_t samples, std::uint64_t seed,
                                                 std::size_t shards) {
    require(n_tasks >= 2 && shards >= 1, "allocation search: need >= 2 tasks and >= 1 shard");
    double best = 0.0;
    for (std::size_t s = 0; s < shards; ++s)
        best = std::max(best, allocation_shard(n_tasks, rho, shard_size(samples, shards, s), seed, s));
    return {best, samples};
}

AllocationSearch random_allocation_search_parallel(std::size_t n_tasks, double rho,
                                                   std::size_t samples, std::uint64_t seed,
                                                   std::size_t shards) {
    require(n_tasks >= 2 && shards >= 1, "allocation search: need >= 2 tasks and >= 1 shard");
    std::vector<double> best(shards, 0.0);
    parallel_for(shards, [&](std::size_t s) {
        best[s] = allocation_shard(n_tasks, rho, shard_size(samples, shards, s), seed, s);
    });
    return {*std::max_element(best.begin(), best.end()), samples};
}

UnionHits union_hits_serial(std::span<const double> thresholds, std::span<const double> loadings,
                            std::size_t samples, std::uint64_t seed, std::size_t shards) {
    require(shards >= 1, "union_hits: need at least one shard");
    const Thresholds w = loadings_to_weights(loadings);
    UnionHits out{std::vector<std::uint64_t>(loadings.size(), 0), samples};
    for (std::size_t s = 0; s < shards; ++s)
        union_shard(thresholds, w, shard_size(samples, shards, s), seed, s, out.hits);
    return out;
}

UnionHits union_hits_parallel(std::span<const double> thresholds,
                              std::span<const double> loadings, std::size_t samples,
                              std::uint64_t seed, std::size_t shards) {
    require(shards >= 1, "union_hits: need at least one shard");
    const Thresholds w = loadings_to_weights(loadings);
    std::vector<std::uint64_t> per_shard(shards * loadings.size(), 0);
    parallel_for(shards, [&](std::size_t s) {
        union_shard(thresholds, w, shard_size(samples, shards, s), seed, s,
                    std::span<std::uint64_t>(per_shard).subspan(s * loadings.size(), loadings.size()));
    });
    UnionHits out{std::vector<std::uint64_t>(loadings.size(), 0), samples};
    for (std::size_t s = 0; s < shards; ++s)
        for (std::size_t j = 0; j < loadings.size(); ++j) out.hits[j] += per_shard[s * loadings.size() + j];
    return out;
}

} // namespace growthlab::kernels
