#include "growthlab/digital_workers.hpp"

#include <cmath>

#include "growthlab/error.hpp"

namespace growthlab::digital {

namespace {

void require_elasticity(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "digital: alpha must lie in (0,1)");
}

// A s B_alpha: growth per unit of c_bar^(-alpha) without depreciation.
double growth_coefficient(double s, double A, double alpha) {
    return A * s * b_alpha(alpha);
}

} // namespace

void DigitalEconomyParams::validate() const {
    require(A > 0.0, "digital: A must be positive");
    require_elasticity(alpha);
    require(s >= 0.0 && s < 1.0, "digital: s must lie in [0,1)");
    require(f > 0.0 && f < 1.0, "digital: f must lie in (0,1)");
    require(c_bar > 0.0 && L0 > 0.0 && K0 > 0.0, "digital: c_bar, L0, K0 must be positive");
    require(delta_L >= 0.0 && delta_K >= 0.0, "digital: depreciation must be non-negative");
}

double calibrate_A(const UsCalibration& cal) {
    require(cal.gdp > 0.0 && cal.capital > 0.0 && cal.labor > 0.0,
            "calibrate_A: aggregates must be positive");
    require_elasticity(cal.alpha);
    return cal.gdp / (std::pow(cal.labor, cal.alpha) * std::pow(cal.capital, 1.0 - cal.alpha));
}

double balanced_f(double alpha) {
    require_elasticity(alpha);
    return alpha;
}

double b_alpha(double alpha) {
    require_elasticity(alpha);
    const double beta = 1.0 - alpha;
    return alpha * alpha * std::pow(beta / alpha, beta) + beta * beta * std::pow(alpha / beta, alpha);
}

double balanced_path_growth(const DigitalEconomyParams& p) {
    p.validate();
    const double k_over_l = (1.0 - p.f) * p.c_bar / p.f;
    return p.A * p.s *
               (p.alpha * std::pow(k_over_l, 1.0 - p.alpha) * p.f / p.c_bar +
                (1.0 - p.alpha) * std::pow(k_over_l, -p.alpha) * (1.0 - p.f)) -
           p.alpha * p.delta_L - (1.0 - p.alpha) * p.delta_K;
}

double steady_state_growth(const DigitalEconomyParams& p) {
    p.validate();
    require(std::abs(p.f - balanced_f(p.alpha)) <= 1e-12,
            "steady_state_growth: requires f = alpha (balanced allocation)");
    return growth_coefficient(p.s, p.A, p.alpha) * std::pow(p.c_bar, -p.alpha) -
           p.alpha * p.delta_L - (1.0 - p.alpha) * p.delta_K;
}

double explosive_cost_threshold(double s, double A, double alpha, double target_g) {
    require(s > 0.0 && s <= 1.0, "explosive_cost_threshold: s must lie in (0,1]");
    require(A > 0.0 && target_g > 0.0, "explosive_cost_threshold: A and target_g must be positive");
    return std::pow(growth_coefficient(s, A, alpha) / target_g, 1.0 / alpha);
}

double explosive_cost_threshold(const DigitalEconomyParams& p, double target_g) {
    p.validate();
    require(target_g > 0.0, "explosive_cost_threshold: target_g must be positive");
    const double needed = target_g + p.alpha * p.delta_L + (1.0 - p.alpha) * p.delta_K;
    return std::pow(growth_coefficient(p.s, p.A, p.alpha) / needed, 1.0 / p.alpha);
}

double min_saving_rate(double c_bar, double A, double alpha, double target_g) {
    require(c_bar >= 0.0 && A > 0.0 && target_g > 0.0, "min_saving_rate: invalid inputs");
    require_elasticity(alpha);
    return target_g * std::pow(c_bar, alpha) / (A * b_alpha(alpha));
}

double worker_cost_from_hardware(double price_perf, double brain_rate) {
    require(price_perf > 0.0 && brain_rate > 0.0, "worker_cost_from_hardware: inputs must be positive");
    return brain_rate / price_perf;
}

double project_hardware_cost(double c0, double halving_years, double horizon) {
    require(c0 > 0.0 && halving_years > 0.0 && horizon >= 0.0, "project_hardware_cost: invalid inputs");
    return c0 * std::exp2(-horizon / halving_years);
}

double project_price_performance(double p0, double doubling_years, double horizon) {
    require(p0 > 0.0 && doubling_years > 0.0 && horizon >= 0.0,
            "project_price_performance: invalid inputs");
    return p0 * std::exp2(horizon / doubling_years);
}

OdeProblem digital_problem(const DigitalEconomyParams& params) {
    params.validate();
    OdeProblem problem;
    problem.dimension = 2;
    problem.state_names = {"L", "K"};
    problem.vector_field = [p = params](double, std::span<const double> s, std::span<double> ds) {
        const double y = p.A * std::pow(s[0], p.alpha) * std::pow(s[1], 1.0 - p.alpha);
        ds[0] = p.s * p.f * y / p.c_bar - p.delta_L * s[0];
        ds[1] = p.s * (1.0 - p.f) * y - p.delta_K * s[1];
    };
    problem.output = [p = params](double, std::span<const double> s) {
        return p.A * std::pow(s[0], p.alpha) * std::pow(s[1], 1.0 - p.alpha);
    };
    return problem;
}

IntegrationResult simulate(const DigitalEconomyParams& params, double horizon, std::size_t samples) {
    const OdeProblem problem = digital_problem(params);
    const double start[2] = {params.L0, params.K0};
    return integrate_to_blowup(problem, start, horizon, 1e-10, samples);
}

} // namespace growthlab::digital
