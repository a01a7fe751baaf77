#pragma once

#include "growthlab/integrate.hpp"

namespace growthlab::digital {

// Units: years, dollars, workers. The productivity multiplier A carries the
// compound unit $^(1-alpha) worker^(-alpha) year^(-1) and is stored as a
// plain number.

/// Y = A L^alpha K^(1-alpha), with AI workers bought at c_bar dollars each.
struct DigitalEconomyParams {
    double A = 2337.0;
    double alpha = 0.7;   // labor elasticity
    double s = 0.2;       // saving rate
    double f = 0.7;       // share of investment going to AI workers
    double c_bar = 1.5e4; // $/worker
    double delta_L = 0.0; // /year
    double delta_K = 0.0; // /year
    double L0 = 1.8e8;    // workers
    double K0 = 7e13;     // $

    void validate() const;
};

struct UsCalibration {
    double gdp = 2e13;     // $/year
    double capital = 7e13; // $
    double labor = 1.8e8;  // workers
    double alpha = 0.7;
};

inline constexpr double kEmployedWorkers = 1.8e8;   // employment-based count
inline constexpr double kLaborForceWorkers = 1.65e8; // labor-force count

/// A = gdp / (labor^alpha capital^(1-alpha)).
double calibrate_A(const UsCalibration& cal);

/// Growth-maximizing AI investment share on the balanced path: f = alpha.
double balanced_f(double alpha);

/// B_alpha = alpha^2 ((1-alpha)/alpha)^(1-alpha) + (1-alpha)^2 (alpha/(1-alpha))^alpha.
double b_alpha(double alpha);

/// Balanced-path growth for arbitrary f, using L/K = f / ((1-f) c_bar).
double balanced_path_growth(const DigitalEconomyParams& params);

/// g_y = A s c_bar^(-alpha) B_alpha - alpha delta_L - (1-alpha) delta_K.
/// Requires params.f == balanced_f(params.alpha).
double steady_state_growth(const DigitalEconomyParams& params);

/// Largest c_bar whose steady-state growth reaches target_g (no depreciation).
double explosive_cost_threshold(double s, double A, double alpha, double target_g = 0.3);

/// Same threshold with the depreciation terms kept.
double explosive_cost_threshold(const DigitalEconomyParams& params, double target_g = 0.3);

/// Smallest saving rate whose steady-state growth reaches target_g (no depreciation).
double min_saving_rate(double c_bar, double A, double alpha, double target_g = 0.3);

/// c_bar = brain_rate [FLOP/year] / price_perf [FLOP/($ year)].
double worker_cost_from_hardware(double price_perf, double brain_rate);

/// c0 2^(-horizon / halving_years).
double project_hardware_cost(double c0, double halving_years, double horizon);

/// p0 2^(horizon / doubling_years); the price-performance view of the same trend.
double project_price_performance(double p0, double doubling_years, double horizon);

OdeProblem digital_problem(const DigitalEconomyParams& params);

/// dL/dt = s f Y / c_bar - delta_L L,  dK/dt = s (1-f) Y - delta_K K.
IntegrationResult simulate(const DigitalEconomyParams& params, double horizon,
                           std::size_t samples = kDefaultSamples);

} // namespace growthlab::digital
