#include "growthlab/ces.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "growthlab/error.hpp"
#include "growthlab/kernels.hpp"

namespace growthlab::ces {

namespace {

void require_complements(double rho) {
    require(std::isfinite(rho) && rho < 0.0, "complements regime required");
}

} // namespace

std::size_t TaskEconomy::unautomated_cells() const {
    return static_cast<std::size_t>(std::llround(unautomated_fraction * static_cast<double>(n_tasks)));
}

void TaskEconomy::validate() const {
    require(rho < 1.0 && rho != 0.0, "ces: rho must lie in (-inf, 1) without 0");
    require(n_tasks >= 2, "ces: need at least two task cells");
    require(input_stock > 0.0, "ces: input stock must be positive");
    require(unautomated_fraction > 0.0 && unautomated_fraction <= 1.0,
            "ces: unautomated fraction must lie in (0,1]");
    require(unautomated_cells() >= 1, "ces: no unautomated cell after rounding");
    require(boost >= 1.0, "ces: boost must be at least 1");
    require(productivity > 0.0, "ces: productivity must be positive");
}

double rho_from_sigma(double sigma) {
    require(sigma > 0.0, "rho_from_sigma: sigma must be positive");
    return (sigma - 1.0) / sigma;
}

CesOutput ces_output(std::span<const double> allocation, double rho, double A) {
    require(!allocation.empty(), "ces_output: empty allocation");
    require(rho < 1.0 && rho != 0.0, "ces_output: rho must lie in (-inf, 1) without 0");
    for (double v : allocation) require(v >= 0.0, "ces_output: negative input");
    if (rho < 0.0 && std::any_of(allocation.begin(), allocation.end(), [](double v) { return v == 0.0; }))
        return {0.0, true};
    const double mean = kernels::power_sum_parallel(allocation, rho) / static_cast<double>(allocation.size());
    return {A * std::pow(mean, 1.0 / rho), false};
}

std::vector<double> optimal_allocation(const TaskEconomy& economy) {
    economy.validate();
    require_complements(economy.rho);
    const std::size_t n = economy.n_tasks;
    const std::size_t human = economy.unautomated_cells();
    const double human_level = economy.input_stock * static_cast<double>(n) / static_cast<double>(human);
    const double automated_level = std::isinf(economy.boost) ? kUnbounded : economy.boost * economy.input_stock;
    std::vector<double> alloc(n, automated_level);
    std::fill(alloc.end() - static_cast<std::ptrdiff_t>(human), alloc.end(), human_level);
    return alloc;
}

double level_effect(double f, double rho) {
    require(f > 0.0 && f <= 1.0, "level_effect: f must lie in (0,1]");
    require_complements(rho);
    // f^((1-rho)/rho) = (1/f)^(1 - 1/rho). Reciprocals of decimal inputs like
    // 0.1 or -0.2 round to exact values, so table entries come out exact.
    return std::pow(1.0 / f, 1.0 - 1.0 / rho);
}

double finite_boost_level_effect(double f, double rho, double m) {
    require(f >= 0.0 && f <= 1.0, "finite_boost_level_effect: f must lie in [0,1]");
    require_complements(rho);
    require(m >= 1.0, "finite_boost_level_effect: m must be at least 1");
    if (std::isinf(m)) {
        require(f > 0.0, "finite_boost_level_effect: unbounded boost needs f > 0");
        return level_effect(f, rho);
    }
    if (f * m <= 1.0) return m;
    return std::pow((1.0 - f) * std::pow(m, rho) + std::pow(f, 1.0 - rho), 1.0 / rho);
}

Trajectory automation_schedule(double rho, double m, double horizon, double rate, std::size_t samples) {
    require_complements(rho);
    require(m > 1.0, "automation_schedule: m must exceed 1");
    require(horizon > 0.0 && rate > 0.0, "automation_schedule: horizon and rate must be positive");
    require(rate * horizon <= 1.0 + 1e-12, "automation_schedule: rate x horizon must not exceed 1");
    require(samples >= 2, "automation_schedule: need at least two samples");

    std::vector<double> t(samples), y(samples);
    StateSeries state{{"automated_fraction"}, {}};
    state.rows.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        t[k] = horizon * static_cast<double>(k) / static_cast<double>(samples - 1);
        const double a = std::min(1.0, rate * t[k]);
        y[k] = finite_boost_level_effect(1.0 - a, rho, m);
        state.rows.push_back({a});
    }
    return Trajectory(std::move(t), std::move(y), std::move(state));
}

double back_loaded_share(const Trajectory& schedule, double fraction) {
    require(fraction > 0.0 && fraction < 1.0, "back_loaded_share: fraction must lie in (0,1)");
    const auto t = schedule.times();
    const auto y = schedule.output();
    const double cut = t.back() - fraction * (t.back() - t.front());
    const double total = std::log(y.back() / y.front());
    require(total > 0.0, "back_loaded_share: schedule has no growth");
    // Log-linear interpolation at the cut.
    std::size_t i = 0;
    while (i + 1 < t.size() && t[i + 1] < cut) ++i;
    const double w = (cut - t[i]) / (t[i + 1] - t[i]);
    const double log_cut = (1.0 - w) * std::log(y[i]) + w * std::log(y[i + 1]);
    return (std::log(y.back()) - log_cut) / total;
}

void UtilityPath::validate() const {
    require(times.size() >= 2 && times.size() == consumption.size(),
            "utility path: need matching times and consumption rows");
    require(rho < 0.0, "utility path: complements regime required");
    const std::size_t n = consumption.front().size();
    require(n >= 1, "utility path: need at least one good");
    for (std::size_t k = 0; k < consumption.size(); ++k) {
        require(consumption[k].size() == n, "utility path: ragged consumption row");
        for (double c : consumption[k]) require(c > 0.0, "utility path: consumption must be positive");
        if (k > 0) require(times[k] > times[k - 1], "utility path: times must increase");
    }
}

double utility(std::span<const double> consumption, double rho) {
    const double mean = kernels::power_sum_serial(consumption, rho) / static_cast<double>(consumption.size());
    return std::pow(mean, 1.0 / rho);
}

IdentityCheck utility_gdp_identity_check(const UtilityPath& path) {
    path.validate();
    const double rho = path.rho;
    IdentityCheck out{0.0, 1.0, 1.0};
    for (std::size_t k = 0; k + 1 < path.times.size(); ++k) {
        const auto& c = path.consumption[k];
        const auto& c_next = path.consumption[k + 1];
        const double u = utility(c, rho);
        const double u_next = utility(c_next, rho);
        const double u_scale = std::pow(u, 1.0 - rho);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double price = std::pow(c[i], rho - 1.0) * u_scale;
            num += price * (c_next[i] - c[i]);
            den += price * c[i];
        }
        const double divisia = num / den;
        const double utility_growth = (u_next - u) / u;
        const double deviation = utility_growth == 0.0
                                     ? std::abs(divisia)
                                     : std::abs(divisia - utility_growth) / std::abs(utility_growth);
        out.max_relative_deviation = std::max(out.max_relative_deviation, deviation);
        out.divisia_ratio *= 1.0 + divisia;
        out.utility_ratio *= u_next / u;
    }
    return out;
}

LevelTable table3(std::span<const double> f_list, std::span<const double> rho_list) {
    require(!f_list.empty() && !rho_list.empty(), "table3: empty grid");
    LevelTable table{{f_list.begin(), f_list.end()}, {rho_list.begin(), rho_list.end()}, {}};
    table.multipliers.assign(f_list.size(), std::vector<double>(rho_list.size()));
    const std::size_t cols = rho_list.size();
    kernels::parallel_for(f_list.size() * cols, [&](std::size_t cell) {
        table.multipliers[cell / cols][cell % cols] = level_effect(f_list[cell / cols], rho_list[cell % cols]);
    });
    return table;
}

void write_table_csv(std::ostream& os, const LevelTable& table) {
    os << 'f';
    for (double rho : table.rho_values) os << ",rho=" << format_number(rho);
    os << '\n';
    for (std::size_t i = 0; i < table.f_values.size(); ++i) {
        os << format_number(table.f_values[i]);
        for (double v : table.multipliers[i]) os << ',' << format_number(v);
        os << '\n';
    }
}

AllocationOracle random_allocation_oracle(std::size_t n_tasks, double rho, double input_stock,
                                          double A, std::size_t samples, std::uint64_t seed) {
    require_complements(rho);
    require(input_stock > 0.0 && A > 0.0, "random_allocation_oracle: invalid economy");
    const auto search = kernels::random_allocation_search_parallel(n_tasks, rho, samples, seed);
    const double equal = A * input_stock;
    return {equal, equal * search.best_ratio, samples};
}

} // namespace growthlab::ces
