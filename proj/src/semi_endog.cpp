#include "growthlab/semi_endog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "growthlab/error.hpp"

namespace growthlab::semi_endog {

namespace {

Regime classify(double sum) {
    if (std::abs(sum - 1.0) <= kBoundaryTolerance) return Regime::boundary;
    return sum > 1.0 ? Regime::explosive : Regime::subexponential;
}

double cobb_douglas(std::span<const double> f, double share) {
    double log_y = 0.0;
    for (double v : f) log_y += share * std::log(v);
    return std::exp(log_y);
}

} // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::subexponential: return "subexponential";
    case Regime::boundary: return "boundary";
    case Regime::explosive: return "explosive";
    }
    return "unknown";
}

void SemiEndogParams::validate() const {
    require(beta > 0.0 && phi > 0.0 && lambda > 0.0, "semi-endog: beta, phi, lambda must be positive");
    require(saving_share_ideas > 0.0 && saving_share_ideas < 1.0 && saving_share_factors > 0.0 &&
                saving_share_factors < 1.0,
            "semi-endog: saving shares must lie in (0,1)");
    require(saving_share_ideas + saving_share_factors <= 1.0, "semi-endog: saving shares exceed one");
    require(A0 > 0.0 && K0 > 0.0, "semi-endog: initial A and K must be positive");
}

void MultiFactorParams::validate() const {
    require(degree > 0.0, "multifactor: degree must be positive");
    require(!endowments.empty(), "multifactor: need at least one factor");
    require(returns.size() == endowments.size(), "multifactor: returns and endowments differ in length");
    require(std::all_of(endowments.begin(), endowments.end(), [](double h) { return h > 0.0; }),
            "multifactor: endowments must be positive");
    require(std::all_of(returns.begin(), returns.end(), [](double r) { return r > 0.0; }),
            "multifactor: returns must be positive");
    require(saving_rate > 0.0 && saving_rate < 1.0, "multifactor: saving rate must lie in (0,1)");
}

Regime returns_condition(double lambda, double phi, double beta) {
    require(phi > 0.0, "returns_condition: phi must be positive");
    return classify(lambda / phi + beta);
}

double hyperbolic_exponent(double d) {
    require(d > 0.0, "hyperbolic_exponent: d must be positive");
    return 2.0 - 1.0 / d;
}

double worst_case_exponent(std::span<const double> returns, double d) {
    require(!returns.empty(), "worst_case_exponent: empty returns list");
    require(d > 0.0, "worst_case_exponent: d must be positive");
    require(std::all_of(returns.begin(), returns.end(), [](double r) { return r > 0.0; }),
            "worst_case_exponent: returns must be positive");
    const double r_min = *std::min_element(returns.begin(), returns.end());
    return 2.0 - 1.0 / (d * r_min);
}

IdeaGrowth idea_growth_exponent(double r, double d, double phi) {
    require(r > 0.0 && d > 0.0 && phi > 0.0, "idea_growth_exponent: inputs must be positive");
    return {(r + d - 1.0) / (1.0 / phi + d), classify(r + d)};
}

IdeaGrowth idea_growth_exponent(double r, double d) {
    require(r > 0.0, "idea_growth_exponent: inputs must be positive");
    return idea_growth_exponent(r, d, 1.0 / r);
}

OdeProblem tfp_capital_problem(const SemiEndogParams& params) {
    params.validate();
    OdeProblem problem;
    problem.dimension = 2;
    problem.state_names = {"A", "K"};
    problem.vector_field = [p = params](double, std::span<const double> s, std::span<double> ds) {
        const double a = s[0], k = s[1];
        const double y = a * std::pow(k, p.beta);
        ds[0] = std::pow(a, 1.0 - p.phi) * std::pow(p.saving_share_ideas * y, p.lambda);
        ds[1] = p.saving_share_factors * y;
    };
    problem.output = [beta = params.beta](double, std::span<const double> s) {
        return s[0] * std::pow(s[1], beta);
    };
    return problem;
}

IntegrationResult simulate_tfp_capital(const SemiEndogParams& params, double horizon,
                                       std::size_t samples) {
    const OdeProblem problem = tfp_capital_problem(params);
    const double start[2] = {params.A0, params.K0};
    return integrate_to_blowup(problem, start, horizon, 1e-10, samples);
}

OdeProblem multifactor_problem(const MultiFactorParams& params) {
    params.validate();
    const std::size_t n = params.endowments.size();
    OdeProblem problem;
    problem.dimension = n;
    for (std::size_t i = 0; i < n; ++i) problem.state_names.push_back("f" + std::to_string(i + 1));

    auto production = [p = params](std::span<const double> f) {
        const double share = p.degree / static_cast<double>(f.size());
        if (p.form == ProductionForm::cobb_douglas) return cobb_douglas(f, share);
        double scale = f[0] / p.endowments[0];
        for (std::size_t i = 1; i < f.size(); ++i) scale = std::min(scale, f[i] / p.endowments[i]);
        return std::pow(scale, p.degree);
    };
    problem.vector_field = [p = params, production](double, std::span<const double> f,
                                                    std::span<double> df) {
        const double y = production(f);
        double denom = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) denom += std::pow(f[j], 1.0 / p.returns[j]);
        for (std::size_t k = 0; k < f.size(); ++k) df[k] = p.saving_rate * y * f[k] / denom;
    };
    problem.output = [production](double, std::span<const double> f) { return production(f); };
    return problem;
}

IntegrationResult simulate_multifactor(const MultiFactorParams& params, double horizon,
                                       std::size_t samples) {
    const OdeProblem problem = multifactor_problem(params);
    return integrate_to_blowup(problem, params.endowments, horizon, 1e-10, samples);
}

SteadyStateRates steady_state_rates(double alpha, double gamma, double phi, double n) {
    require(phi < 1.0, "requires diminishing idea returns");
    require(alpha > 0.0 && alpha < 1.0, "steady_state_rates: alpha must lie in (0,1)");
    require(gamma > 0.0, "steady_state_rates: gamma must be positive");
    require(n >= 0.0, "steady_state_rates: n must be non-negative");
    const double one_minus_phi = 1.0 - phi;
    const double one_minus_alpha = 1.0 - alpha;
    const double capital_factor =
        (gamma + one_minus_phi * one_minus_alpha) / (one_minus_phi * one_minus_alpha);
    SteadyStateRates out{};
    out.g_a = gamma / one_minus_phi * n;
    out.g_k = n * capital_factor;
    out.g_y = n * (alpha * capital_factor + gamma / one_minus_phi * one_minus_alpha);
    out.n = n;
    out.gamma = gamma;
    out.phi = phi;
    out.alpha = alpha;
    return out;
}

} // namespace growthlab::semi_endog
