#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "growthlab/trajectory.hpp"

namespace growthlab::ces {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Unit continuum of tasks discretized into n_tasks equal cells. A fraction
/// 1 - f of the cells is automated and gets `boost` times the pre-automation
/// input; the human stock I is spread over the remaining cells.
struct TaskEconomy {
    double rho = -1.0;
    std::size_t n_tasks = 1000;
    double input_stock = 1.0;           // I
    double unautomated_fraction = 1.0;  // f
    double boost = kUnbounded;          // m
    double productivity = 1.0;          // A

    std::size_t unautomated_cells() const;
    void validate() const;
};

struct CesOutput {
    double value;
    bool bottlenecked; // some task had zero input while rho < 0
};

/// rho = (sigma - 1) / sigma. sigma = 1 gives 0, the Cobb-Douglas limit,
/// which the CES evaluators reject.
double rho_from_sigma(double sigma);

/// A (mean_i I_i^rho)^(1/rho) over the discretized continuum.
CesOutput ces_output(std::span<const double> allocation, double rho, double A);

/// Equal split of the human stock over unautomated cells (I n / u each);
/// automated cells get boost x I, or +inf when the boost is unbounded.
std::vector<double> optimal_allocation(const TaskEconomy& economy);

/// f^((1-rho)/rho): output gain once a fraction 1 - f of tasks gets
/// unbounded input and the rest share the human stock.
double level_effect(double f, double rho);

/// Output gain when automated tasks get m x baseline input. Per-task input
/// saturates at that automated level, so for f < 1/m the gain is m.
double finite_boost_level_effect(double f, double rho, double m);

/// Automating `rate` of tasks per year: a(t) = rate t and
/// Y(t)/Y(0) = finite_boost_level_effect(1 - a(t), rho, m).
Trajectory automation_schedule(double rho, double m, double horizon, double rate,
                               std::size_t samples = 801);

/// Share of total log-output growth realized in the closing `fraction` of the schedule.
double back_loaded_share(const Trajectory& schedule, double fraction = 0.1);

/// Consumption per task over time; prices follow marginal utility.
struct UtilityPath {
    std::vector<double> times;
    std::vector<std::vector<double>> consumption; // consumption[k][i] at times[k]
    double rho = -0.5;

    void validate() const;
};

/// CES utility (mean_i c_i^rho)^(1/rho).
double utility(std::span<const double> consumption, double rho);

struct IdentityCheck {
    double max_relative_deviation; // max_k |dY/Y - dU/U| / |dU/U|
    double divisia_ratio;          // chained Y(T)/Y(0)
    double utility_ratio;          // U(T)/U(0)
};

/// Compares Divisia output growth sum p_i dc_i / sum p_i c_i, with
/// p_i = c_i^(rho-1) U^(1-rho), against dU/U at every step.
IdentityCheck utility_gdp_identity_check(const UtilityPath& path);

struct LevelTable {
    std::vector<double> f_values;
    std::vector<double> rho_values;
    std::vector<std::vector<double>> multipliers; // [f row][rho column]
};

/// level_effect over the grid, evaluated in parallel.
LevelTable table3(std::span<const double> f_list, std::span<const double> rho_list);

/// CSV: header `f,rho=<r1>,rho=<r2>,...`, one row per f.
void write_table_csv(std::ostream& os, const LevelTable& table);

struct AllocationOracle {
    double equal_split_output;
    double best_random_output;
    std::size_t samples;
};

/// Best output among random feasible allocations of the budget versus the
/// equal split, for a small economy with unit-mean input.
AllocationOracle random_allocation_oracle(std::size_t n_tasks, double rho, double input_stock,
                                          double A, std::size_t samples, std::uint64_t seed);

} // namespace growthlab::ces
