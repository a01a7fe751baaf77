#pragma once

#include <array>

// Published values checked by `growthlab reproduce`, with their tolerances.
namespace growthlab::cli::fixtures {

struct PrintedCell {
    double f, rho, printed;
    int digits; // significant figures as printed
};

inline constexpr std::array<PrintedCell, 9> kLevelTable{{
    {0.05, -0.2, 6.4e7, 2},
    {0.10, -0.2, 1e6, 1},
    {0.25, -0.2, 4.1e3, 2},
    {0.05, -0.4, 3.6e4, 2},
    {0.10, -0.4, 3.2e3, 2},
    {0.25, -0.4, 128, 3},
    {0.05, -2.0, 89, 2},
    {0.10, -2.0, 32, 2},
    {0.25, -2.0, 8, 1},
}};
inline constexpr double kLevelTableTolerance = 0.01;

// Calibration against US aggregates.
inline constexpr double kGdp = 2e13;
inline constexpr double kCapital = 7e13;
inline constexpr double kWorkers = 1.8e8;
inline constexpr double kAlpha = 0.7;
inline constexpr double kA = 2337;
inline constexpr double kBAlpha = 0.54;
inline constexpr double kCoefficient = 1262;
inline constexpr double kCalibrationTolerance = 0.01;
inline constexpr double kThresholdCost = 1.5e5;
inline constexpr double kThresholdTolerance = 0.02;
inline constexpr double kWorkerCost = 1.5e4;
inline constexpr double kMinSavingRate = 0.2;
inline constexpr double kHardwarePricePerf = 2e18;
inline constexpr double kBrainRate = 3e22;
inline constexpr double kExplosiveGrowth = 0.3;
inline constexpr double kGrowthTolerance = 0.01; // absolute, per year

// Headline level effect and a finite boost.
inline constexpr double kHeadlineF = 0.1;
inline constexpr double kHeadlineRho = -1.0;
inline constexpr double kHeadlineEffect = 100;
inline constexpr double kCaveatBoost = 10;

// Gradual automation.
inline constexpr double kScheduleBoost = 100;
inline constexpr double kScheduleYears = 80;
inline constexpr std::array<double, 4> kScheduleRhos{-0.5, -1.0, -2.0, -5.0};

// Steady-state rates.
inline constexpr double kSteadyAlpha = 0.3;
inline constexpr double kSteadyGamma = 0.2;
inline constexpr double kSteadyPhi = 0.8;
inline constexpr double kPrintedGyOverN = 1.5;
inline constexpr double kSteadyTolerance = 1e-4;

// Investment delay.
inline constexpr double kDelayA = 2.0 / 3.0;
inline constexpr double kDelayS = 0.3;
inline constexpr double kPrintedDiscount = 0.618;
inline constexpr double kDiscountTolerance = 1e-6;
inline constexpr double kFitTolerance = 0.01;

} // namespace growthlab::cli::fixtures
