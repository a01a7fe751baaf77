#include "growthlab/beliefs.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/distributions/normal.hpp>

#include "growthlab/error.hpp"

namespace growthlab::beliefs {

namespace {

std::vector<double> normal_thresholds(std::span<const double> marginals) {
    const boost::math::normal_distribution<double> standard;
    std::vector<double> q;
    q.reserve(marginals.size());
    for (double p : marginals) {
        if (p <= 0.0)
            q.push_back(-std::numeric_limits<double>::infinity());
        else if (p >= 1.0)
            q.push_back(std::numeric_limits<double>::infinity());
        else
            q.push_back(boost::math::quantile(standard, p));
    }
    return q;
}

Estimate to_estimate(std::uint64_t hits, std::uint64_t samples) {
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    return {p, std::sqrt(p * (1.0 - p) / n)};
}

} // namespace

void ArgumentSet::validate() const {
    require(!marginals.empty(), "argument set: no arguments");
    require(names.empty() || names.size() == marginals.size(), "argument set: names and marginals differ");
    for (double p : marginals) require(p >= 0.0 && p <= 1.0, "argument set: marginal outside [0,1]");
    require(latent_corr >= 0.0 && latent_corr < 1.0, "argument set: latent_corr must lie in [0,1)");
    require(n_samples >= 1 && shards >= 1, "argument set: need samples and shards");
}

double disjunction_independent(std::span<const double> marginals) {
    double none = 1.0;
    for (double p : marginals) {
        require(p >= 0.0 && p <= 1.0, "disjunction_independent: marginal outside [0,1]");
        none *= 1.0 - p;
    }
    return 1.0 - none;
}

Estimate disjunction_correlated(const ArgumentSet& args) {
    const double loading[1] = {args.latent_corr};
    return disjunction_correlated_grid(args, loading).front();
}

std::vector<Estimate> disjunction_correlated_grid(const ArgumentSet& args,
                                                  std::span<const double> loadings) {
    args.validate();
    const auto thresholds = normal_thresholds(args.marginals);
    const auto hits = kernels::union_hits_parallel(thresholds, loadings, args.n_samples, args.seed, args.shards);
    std::vector<Estimate> out;
    out.reserve(loadings.size());
    for (auto h : hits.hits) out.push_back(to_estimate(h, hits.samples));
    return out;
}

double laplace_time_invariant(double ooms_observed, double ooms_ahead) {
    require(ooms_observed > 0.0 && ooms_ahead > 0.0, "laplace_time_invariant: inputs must be positive");
    return ooms_ahead / (ooms_observed + ooms_ahead);
}

Headroom resource_headroom(double current, double limit) {
    require(current > 0.0 && limit > current, "resource_headroom: need limit > current > 0");
    const double ratio = limit / current;
    return {current, limit, ratio, std::log10(ratio)};
}

double implied_growth_under_headroom(double ooms, double transition_years) {
    require(ooms > 0.0 && transition_years > 0.0, "implied_growth_under_headroom: inputs must be positive");
    return std::pow(10.0, ooms / transition_years) - 1.0;
}

std::vector<AggregateRow> aggregate(const ArgumentSet& args) {
    args.validate();
    const double independent = disjunction_independent(args.marginals);
    const Estimate correlated = disjunction_correlated(args);
    return {
        {"independent", {independent, 0.0}, likelihood_term(independent)},
        {"correlated", correlated, likelihood_term(correlated.probability)},
    };
}

void write_aggregate_csv(std::ostream& os, std::span<const AggregateRow> rows) {
    os << "aggregate,estimate,standard_error,likelihood\n";
    for (const auto& row : rows)
        os << row.name << ',' << format_number(row.estimate.probability) << ','
           << format_number(row.estimate.standard_error) << ',' << to_string(row.term.term) << '\n';
}

} // namespace growthlab::beliefs
