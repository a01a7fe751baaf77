#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "growthlab/integrate.hpp"

namespace growthlab::semi_endog {

enum class Regime { subexponential, boundary, explosive };

std::string_view to_string(Regime regime);

/// Relative tolerance used to call a returns sum equal to one.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Output Y = A K^beta; capital and ideas accumulate out of output shares.
struct SemiEndogParams {
    double beta = 1.0;
    double phi = 3.125;
    double lambda = 1.0;
    double saving_share_ideas = 0.1;   // alpha_A
    double saving_share_factors = 0.2; // alpha_f
    double A0 = 1.0;
    double K0 = 1.0;

    void validate() const;
};

enum class ProductionForm { cobb_douglas, leontief };

/// Homogeneous factor economy with ratio-preserving investment.
struct MultiFactorParams {
    double degree = 1.0;               // d
    std::vector<double> endowments{1.0, 1.0}; // h_i, also the initial stocks
    std::vector<double> returns{1.0, 1.0};    // r_i = lambda_i / phi_i
    double saving_rate = 0.3;          // alpha
    ProductionForm form = ProductionForm::cobb_douglas;

    void validate() const;
};

struct SteadyStateRates {
    double g_a, g_k, g_y;
    double n, gamma, phi, alpha;
};

struct IdeaGrowth {
    double exponent; // (r + d - 1) / (1/phi + d)
    Regime verdict;
};

/// Explosive iff lambda/phi + beta > 1.
Regime returns_condition(double lambda, double phi, double beta);

/// 2 - 1/d: dY/dt ~ Y^c for a degree-d economy with every factor accumulable.
double hyperbolic_exponent(double d);

/// 2 - 1/(d min r_i): guaranteed exponent when factor returns differ.
double worst_case_exponent(std::span<const double> returns, double d);

IdeaGrowth idea_growth_exponent(double r, double d, double phi);
/// Normalized idea production (lambda = 1), so phi = 1/r.
IdeaGrowth idea_growth_exponent(double r, double d);

/// dK/dt = alpha_f Y, dA/dt = A^(1-phi) (alpha_A Y)^lambda, Y = A K^beta.
OdeProblem tfp_capital_problem(const SemiEndogParams& params);
IntegrationResult simulate_tfp_capital(const SemiEndogParams& params, double horizon,
                                       std::size_t samples = kDefaultSamples);

/// df_k/dt = alpha Y f_k / sum_j f_j^(1/r_j). With unit returns this is the
/// plain ratio-preserving rule alpha Y f_k / sum_j f_j.
OdeProblem multifactor_problem(const MultiFactorParams& params);
IntegrationResult simulate_multifactor(const MultiFactorParams& params, double horizon,
                                       std::size_t samples = kDefaultSamples);

/// Balanced-growth rates with population growth n and diminishing idea returns.
SteadyStateRates steady_state_rates(double alpha, double gamma, double phi, double n);

} // namespace growthlab::semi_endog
