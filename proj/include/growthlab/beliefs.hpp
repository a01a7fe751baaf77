#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "growthlab/growth.hpp"
#include "growthlab/kernels.hpp"

namespace growthlab::beliefs {

/// Blocker arguments with marginal probabilities and a common-factor loading.
struct ArgumentSet {
    std::vector<std::string> names;
    std::vector<double> marginals;
    double latent_corr = 0.0; // in [0, 1)
    std::uint64_t seed = 20240101;
    std::size_t n_samples = 1'000'000;
    std::size_t shards = kernels::kDefaultShards;

    void validate() const;
};

struct Estimate {
    double probability;
    double standard_error;
};

struct Headroom {
    double current_level;
    double limit_level;
    double ratio; // limit / current
    double ooms;  // log10(ratio)
};

/// 1 - prod(1 - p_i).
double disjunction_independent(std::span<const double> marginals);

/// Monte Carlo estimate of P(any argument holds) under the one-factor
/// Gaussian threshold model.
Estimate disjunction_correlated(const ArgumentSet& args);

/// The same draws evaluated at every loading in `loadings`.
std::vector<Estimate> disjunction_correlated_grid(const ArgumentSet& args,
                                                  std::span<const double> loadings);

/// ooms_ahead / (ooms_observed + ooms_ahead): chance a new blocker turns up
/// within the next ooms_ahead orders of magnitude.
double laplace_time_invariant(double ooms_observed, double ooms_ahead);

Headroom resource_headroom(double current, double limit);

/// Constant annual growth that uses up `ooms` orders of magnitude in
/// `transition_years`: 10^(ooms / years) - 1.
double implied_growth_under_headroom(double ooms, double transition_years);

struct AggregateRow {
    std::string name;
    Estimate estimate;
    LikelihoodTerm term;
};

/// Independent and correlated aggregates, in that order.
std::vector<AggregateRow> aggregate(const ArgumentSet& args);

/// CSV: `aggregate,estimate,standard_error,likelihood`.
void write_aggregate_csv(std::ostream& os, std::span<const AggregateRow> rows);

} // namespace growthlab::beliefs
