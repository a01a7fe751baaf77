#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "growthlab/trajectory.hpp"

namespace growthlab {

using VectorField = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;
using OutputMap = std::function<double(double t, std::span<const double> y)>;

struct OdeProblem {
    std::size_t dimension = 1;
    VectorField vector_field;
    /// Max-norm level that counts as divergence. Defaults to 1e12 x |y0|.
    std::optional<double> blowup_cap;
    double min_step = 1e-15; // years
    /// Scalar reported as the trajectory's output; defaults to y[0].
    OutputMap output;
    /// Names for the recorded state columns; defaults to y0, y1, ...
    std::vector<std::string> state_names;
};

enum class Termination { horizon_reached, cap_reached, step_underflow };

struct IntegrationResult {
    Trajectory trajectory;
    std::optional<double> blowup_time; // set iff reason != horizon_reached
    Termination reason = Termination::horizon_reached;
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
};

inline constexpr std::size_t kDefaultSamples = 512;

/// Integrates from grid.front() to grid.back() with an embedded
/// Dormand-Prince 5(4) pair, sampling the dense output at every grid point
/// reached. On early termination the terminal state is appended.
IntegrationResult integrate_adaptive(const OdeProblem& problem, std::span<const double> grid,
                                     std::span<const double> y0, double rel_tol);

/// Uniform grid of `samples` points over [t0, t1].
IntegrationResult integrate_adaptive(const OdeProblem& problem, double t0, double t1,
                                     std::span<const double> y0, double rel_tol,
                                     std::size_t samples = kDefaultSamples);

/// Integrates from t = 0 until the cap, the horizon, or step underflow. When
/// the run stops early, it is repeated on a grid that ends at the stopping
/// time so the returned trajectory keeps `samples` points up to divergence.
IntegrationResult integrate_to_blowup(const OdeProblem& problem, std::span<const double> y0,
                                      double horizon, double rel_tol = 1e-9,
                                      std::size_t samples = kDefaultSamples);

std::string_view to_string(Termination reason);

} // namespace growthlab
