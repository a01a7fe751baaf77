#include "growthlab/delays.hpp"

#include <cmath>

#include "growthlab/error.hpp"

namespace growthlab::delays {

void DelayParams::validate() const {
    require(A > 0.0 && s > 0.0 && eta > 0.0 && K0 > 0.0 && I0 > 0.0,
            "delay: A, s, eta, K0, I0 must be positive");
    require(std::isfinite(eta), "delay: simulation needs a finite eta");
}

double asymptotic_growth(double A, double s, double eta) {
    require(A > 0.0 && s > 0.0 && eta > 0.0, "asymptotic_growth: inputs must be positive");
    const double instant = A * s;
    if (std::isinf(eta)) return instant;
    // eta (sqrt(1 + x) - 1) / 2 with x = 4As/eta, rearranged to avoid cancellation.
    return 2.0 * instant / (1.0 + std::sqrt(1.0 + 4.0 * instant / eta));
}

double delay_discount(double A, double s, double eta) {
    return asymptotic_growth(A, s, eta) / (A * s);
}

double halving_time(double eta) {
    require(eta > 0.0, "halving_time: eta must be positive");
    return std::isinf(eta) ? 0.0 : std::log(2.0) / eta;
}

OdeProblem delay_problem(const DelayParams& params) {
    params.validate();
    OdeProblem problem;
    problem.dimension = 2;
    problem.state_names = {"K", "I"};
    problem.vector_field = [p = params](double, std::span<const double> x, std::span<double> dx) {
        dx[0] = x[1];
        dx[1] = p.eta * (p.s * p.A * x[0] - x[1]);
    };
    problem.output = [A = params.A](double, std::span<const double> x) { return A * x[0]; };
    return problem;
}

IntegrationResult simulate_delay(const DelayParams& params, double horizon, std::size_t samples) {
    const OdeProblem problem = delay_problem(params);
    const double start[2] = {params.K0, params.I0};
    return integrate_adaptive(problem, 0.0, horizon, start, 1e-10, samples);
}

double fitted_growth(const Trajectory& traj) {
    require(traj.size() >= 8, "fitted_growth: need at least 8 samples");
    const auto t = traj.times();
    const auto y = traj.output();
    const double cut = t.back() - 0.25 * (t.back() - t.front());
    double n = 0.0, mt = 0.0, my = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < cut) continue;
        n += 1.0;
        mt += t[i];
        my += std::log(y[i]);
    }
    require(n >= 2.0, "fitted_growth: closing quarter has fewer than two samples");
    mt /= n;
    my /= n;
    double stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < cut) continue;
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (std::log(y[i]) - my);
    }
    return sty / stt;
}

} // namespace growthlab::delays
