#pragma once

#include "growthlab/integrate.hpp"

namespace growthlab::delays {

/// Realized investment I chases savings s Y at rate eta:
///   dK/dt = I,  dI/dt = eta (s Y - I),  Y = A K.
/// eta may be +infinity (instant adjustment).
struct DelayParams {
    double A = 2.0 / 3.0; // /year
    double s = 0.3;
    double eta = 0.2;     // /year
    double K0 = 1.0;      // $
    double I0 = 0.2;      // $/year

    void validate() const;
};

/// Positive root of t^2 + eta t - A s eta.
double asymptotic_growth(double A, double s, double eta);

/// asymptotic_growth / (A s); (sqrt(5) - 1) / 2 when eta = A s.
double delay_discount(double A, double s, double eta);

/// Years for investment to close half the gap to s Y: ln 2 / eta.
double halving_time(double eta);

OdeProblem delay_problem(const DelayParams& params);
IntegrationResult simulate_delay(const DelayParams& params, double horizon,
                                 std::size_t samples = kDefaultSamples);

/// OLS slope of log Y against t over the closing quarter of the run.
double fitted_growth(const Trajectory& traj);

} // namespace growthlab::delays
