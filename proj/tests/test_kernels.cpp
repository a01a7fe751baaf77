#include <omp.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "growthlab/kernels.hpp"

using namespace growthlab::kernels;

namespace {

std::vector<double> random_positive(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::lognormal_distribution<double> dist(0.0, 1.5);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

} // namespace

TEST_CASE("shard sizes add up") {
    for (std::size_t total : {0u, 1u, 63u, 64u, 1000u, 1000003u}) {
        std::size_t sum = 0;
        for (std::size_t s = 0; s < 64; ++s) sum += shard_size(total, 64, s);
        CHECK(sum == total);
    }
}

TEST_CASE("power sum parallel agrees with the serial reference") {
    for (std::size_t n : {1u, 17u, 4096u, 4097u, 100000u}) {
        const auto x = random_positive(n, n);
        for (double p : {-5.0, -1.0, -0.25, 0.5, 2.0}) {
            CAPTURE(n);
            CAPTURE(p);
            const double a = power_sum_serial(x, p);
            const double b = power_sum_parallel(x, p);
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        }
    }
    SUBCASE("infinite entries contribute nothing for negative powers") {
        std::vector<double> x(10000, 2.0);
        for (std::size_t i = 0; i < x.size(); i += 2) x[i] = INFINITY;
        CHECK(power_sum_parallel(x, -1.0) == doctest::Approx(2500.0));
    }
}

TEST_CASE("allocation search is bit-identical serial vs parallel and across thread counts") {
    const auto serial = random_allocation_search_serial(6, -0.7, 5000, 99);
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        const auto parallel = random_allocation_search_parallel(6, -0.7, 5000, 99);
        CHECK(parallel.best_ratio == serial.best_ratio);
    }
    CHECK(serial.best_ratio <= 1.0);
    CHECK(serial.best_ratio > 0.9);
}

TEST_CASE("union hits are bit-identical serial vs parallel and across thread counts") {
    const std::vector<double> thresholds{-0.8, -1.2, 0.1};
    const std::vector<double> loadings{0.0, 0.3, 0.9};
    const auto serial = union_hits_serial(thresholds, loadings, 20000, 5);
    for (int threads : {1, 2, 5}) {
        omp_set_num_threads(threads);
        const auto parallel = union_hits_parallel(thresholds, loadings, 20000, 5);
        CHECK(parallel.hits == serial.hits);
        CHECK(parallel.samples == 20000);
    }
    // Different shard counts give different (but valid) streams.
    const auto other = union_hits_serial(thresholds, loadings, 20000, 5, 7);
    CHECK(other.hits != serial.hits);
}

TEST_CASE("parallel_for rethrows worker exceptions") {
    omp_set_num_threads(4);
    std::vector<int> seen(100, 0);
    CHECK_THROWS_AS(parallel_for(100,
                                 [&](std::size_t i) {
                                     seen[i] = 1;
                                     if (i == 57) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    parallel_for(100, [&](std::size_t i) { seen[i] = 2; });
    for (int v : seen) CHECK(v == 2);
}
