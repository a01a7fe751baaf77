#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "growthlab/trajectory.hpp"

namespace growthlab {

struct AnnualGrowth {
    double year;   // end of the one-year window
    double growth; // Y(year) / Y(year - 1) - 1
};

/// Resample onto the integer-year grid [ceil(t0), floor(tN)] by log-linear
/// (geometric) interpolation. Throws "insufficient data" below two grid years.
Trajectory annualize(const Trajectory& traj);

std::vector<AnnualGrowth> annual_growth_rates(const Trajectory& traj);

/// Continuously compounded mean growth rate over the closing `years` of the
/// annualized series, i.e. mean of log(Y(t+1)/Y(t)).
double trailing_log_growth(const Trajectory& traj, double years);

struct GrowthAssessment {
    bool explosive = false;
    std::optional<double> first_explosive_year;
    double peak_annual_growth = 0.0;
    // Inclusive running maximum of annual output, one entry per grid year.
    std::vector<double> running_max_series;
};

/// A year is explosive when its output exceeds (1 + threshold) times the
/// highest output of every strictly earlier year. Crashes followed by
/// recoveries back to the old peak therefore never count.
GrowthAssessment detect_explosive(const Trajectory& traj, double threshold = 0.3);

struct PowerLawFit {
    double exponent;     // c in dY/dt ~ Y^c
    double intercept;    // log prefactor
    double r_squared;
    std::size_t samples_used;
};

/// OLS slope of log(dY/dt) on log(Y). dY/dt comes from a centered,
/// non-uniform three-point difference of log Y; the final two samples are
/// skipped and non-positive derivative estimates are dropped.
PowerLawFit fit_power_law_exponent(const Trajectory& traj);

enum class Likelihood {
    exceptionally_unlikely,
    very_unlikely,
    unlikely,
    about_as_likely_as_not,
    likely,
    very_likely,
    virtually_certain,
};

struct LikelihoodTerm {
    Likelihood term;
    double lower; // inclusive
    double upper; // exclusive, except 1.0 for the top band
};

/// Bands are lower-inclusive: [0,.01) [.01,.1) [.1,1/3) [1/3,2/3) [2/3,.9) [.9,.99) [.99,1].
LikelihoodTerm likelihood_term(double p);

std::string_view to_string(Likelihood term);

} // namespace growthlab
