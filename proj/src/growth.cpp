#include "growthlab/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "growthlab/error.hpp"

namespace growthlab {

Trajectory annualize(const Trajectory& traj) {
    require(traj.size() >= 2, "insufficient data");
    const auto t = traj.times();
    const auto y = traj.output();

    const double first = std::ceil(t.front());
    const double last = std::floor(t.back());
    require(last - first >= 1.0, "insufficient data");

    std::vector<double> years, levels;
    std::size_t seg = 0;
    for (double year = first; year <= last; year += 1.0) {
        while (seg + 2 < t.size() && t[seg + 1] < year) ++seg;
        double level;
        if (year == t[seg]) {
            level = y[seg];
        } else if (year == t[seg + 1]) {
            level = y[seg + 1];
        } else {
            const double w = (year - t[seg]) / (t[seg + 1] - t[seg]);
            level = std::exp((1.0 - w) * std::log(y[seg]) + w * std::log(y[seg + 1]));
        }
        years.push_back(year);
        levels.push_back(level);
    }
    return Trajectory(std::move(years), std::move(levels));
}

std::vector<AnnualGrowth> annual_growth_rates(const Trajectory& traj) {
    const Trajectory annual = annualize(traj);
    std::vector<AnnualGrowth> out;
    out.reserve(annual.size() - 1);
    for (std::size_t i = 1; i < annual.size(); ++i)
        out.push_back({annual.times()[i], annual.output()[i] / annual.output()[i - 1] - 1.0});
    return out;
}

double trailing_log_growth(const Trajectory& traj, double years) {
    const Trajectory annual = annualize(traj);
    const auto t = annual.times();
    const auto y = annual.output();
    const double cutoff = t.back() - years;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 1; i < annual.size(); ++i) {
        if (t[i - 1] < cutoff) continue;
        sum += std::log(y[i] / y[i - 1]);
        ++count;
    }
    require(count > 0, "insufficient data");
    return sum / static_cast<double>(count);
}

GrowthAssessment detect_explosive(const Trajectory& traj, double threshold) {
    require(threshold >= 0.0, "detect_explosive: threshold must be non-negative");
    const Trajectory annual = annualize(traj);
    const auto t = annual.times();
    const auto y = annual.output();

    GrowthAssessment out;
    out.running_max_series.reserve(annual.size());
    out.peak_annual_growth = -1.0;
    double peak = y[0];
    out.running_max_series.push_back(peak);
    for (std::size_t i = 1; i < annual.size(); ++i) {
        out.peak_annual_growth = std::max(out.peak_annual_growth, y[i] / y[i - 1] - 1.0);
        if (!out.explosive && y[i] > (1.0 + threshold) * peak) {
            out.explosive = true;
            out.first_explosive_year = t[i];
        }
        peak = std::max(peak, y[i]);
        out.running_max_series.push_back(peak);
    }
    return out;
}

PowerLawFit fit_power_law_exponent(const Trajectory& traj) {
    require(traj.size() >= 10, "fit_power_law_exponent: need at least 10 samples");
    const auto t = traj.times();
    const auto y = traj.output();
    const std::size_t n = traj.size();

    std::vector<double> xs, ys;
    for (std::size_t i = 1; i + 2 < n; ++i) {
        const double hm = t[i] - t[i - 1];
        const double hp = t[i + 1] - t[i];
        const double lm = std::log(y[i - 1]);
        const double l0 = std::log(y[i]);
        const double lp = std::log(y[i + 1]);
        const double dlog = (hm * hm * (lp - l0) + hp * hp * (l0 - lm)) / (hm * hp * (hm + hp));
        const double deriv = y[i] * dlog;
        if (!(deriv > 0.0) || !std::isfinite(deriv)) continue;
        xs.push_back(l0);
        ys.push_back(std::log(deriv));
    }
    require(xs.size() >= 5, "fit_power_law_exponent: fewer than 5 usable derivative samples");

    const double m = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    require(sxx > 0.0, "fit_power_law_exponent: output does not vary");
    const double slope = sxy / sxx;
    const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, my - slope * mx, r2, xs.size()};
}

namespace {

struct Band {
    Likelihood term;
    double lower;
    double upper;
};

constexpr std::array<Band, 7> kBands{{
    {Likelihood::exceptionally_unlikely, 0.0, 0.01},
    {Likelihood::very_unlikely, 0.01, 0.10},
    {Likelihood::unlikely, 0.10, 1.0 / 3.0},
    {Likelihood::about_as_likely_as_not, 1.0 / 3.0, 2.0 / 3.0},
    {Likelihood::likely, 2.0 / 3.0, 0.90},
    {Likelihood::very_likely, 0.90, 0.99},
    {Likelihood::virtually_certain, 0.99, 1.0},
}};

} // namespace

LikelihoodTerm likelihood_term(double p) {
    require(p >= 0.0 && p <= 1.0, "likelihood_term: probability outside [0,1]");
    for (const auto& band : kBands)
        if (p < band.upper) return {band.term, band.lower, band.upper};
    const auto& top = kBands.back();
    return {top.term, top.lower, top.upper};
}

std::string_view to_string(Likelihood term) {
    switch (term) {
    case Likelihood::exceptionally_unlikely: return "exceptionally unlikely";
    case Likelihood::very_unlikely: return "very unlikely";
    case Likelihood::unlikely: return "unlikely";
    case Likelihood::about_as_likely_as_not: return "about as likely as not";
    case Likelihood::likely: return "likely";
    case Likelihood::very_likely: return "very likely";
    case Likelihood::virtually_certain: return "virtually certain";
    }
    return "unknown";
}

} // namespace growthlab
