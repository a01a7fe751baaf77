#include <cmath>
#include <random>

#include "doctest.h"
#include "growthlab/digital_workers.hpp"
#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"

using namespace growthlab;
using namespace growthlab::digital;

namespace {

// Round to `digits` significant figures, the way a printed table would.
double round_sig(double x, int digits) {
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
    return std::round(x * scale) / scale;
}

// Bisection for the c_bar that hits target growth, used to check the closed forms.
double bisect_cost(DigitalEconomyParams p, double target) {
    double lo = 1e-3, hi = 1e9;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        p.c_bar = mid;
        (steady_state_growth(p) > target ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

} // namespace

TEST_CASE("calibrating A") {
    const UsCalibration us;
    CHECK(std::abs(calibrate_A(us) / 2337.0 - 1.0) < 0.01);
    UsCalibration doubled = us;
    doubled.gdp *= 2.0;
    CHECK(calibrate_A(doubled) == doctest::Approx(2.0 * calibrate_A(us)).epsilon(1e-14));
    CHECK(calibrate_A({5.0, 1.0, 1.0, 0.4}) == 5.0);
    SUBCASE("labor force count is a supported alternative") {
        UsCalibration lf = us;
        lf.labor = kLaborForceWorkers;
        CHECK(calibrate_A(lf) > calibrate_A(us));
    }
    CHECK_THROWS_AS(calibrate_A({2e13, 7e13, 1.8e8, 1.0}), Error);
}

TEST_CASE("balanced share and B_alpha") {
    CHECK(balanced_f(0.7) == 0.7);
    CHECK(balanced_f(0.5) == 0.5);
    CHECK(balanced_f(0.3) == 0.3);
    CHECK(std::abs(b_alpha(0.7) - 0.54) < 0.005);
    // The balanced share maximizes growth over f.
    DigitalEconomyParams p;
    const double best = balanced_path_growth(p);
    for (double f = 0.05; f < 1.0; f += 0.05) {
        DigitalEconomyParams q = p;
        q.f = f;
        CHECK(balanced_path_growth(q) <= best * (1.0 + 1e-12));
    }
    CHECK(balanced_path_growth(p) == doctest::Approx(steady_state_growth(p)).epsilon(1e-12));
}

TEST_CASE("steady-state growth") {
    DigitalEconomyParams p;
    CHECK(std::abs(steady_state_growth(p) / 0.30 - 1.0) < 0.02);
    p.s = 0.0;
    CHECK(steady_state_growth(p) == 0.0);
    p.s = 1.0;
    CHECK_THROWS_AS(steady_state_growth(p), Error);
    SUBCASE("f away from alpha is rejected") {
        DigitalEconomyParams q;
        q.f = 0.5;
        CHECK_THROWS_AS(steady_state_growth(q), Error);
    }
    SUBCASE("vanishing saving gives vanishing growth") {
        DigitalEconomyParams q;
        q.s = 1e-12;
        CHECK(steady_state_growth(q) < 1e-11);
    }
}

TEST_CASE("explosive cost threshold") {
    const double A = 2337.0;
    CHECK(std::abs(explosive_cost_threshold(1.0, A, 0.7) / 1.5e5 - 1.0) < 0.02);
    CHECK(std::abs(explosive_cost_threshold(0.2, A, 0.7) / 1.5e4 - 1.0) < 0.02);
    CHECK(explosive_cost_threshold(0.5, A, 0.7, 0.6) ==
          doctest::Approx(explosive_cost_threshold(0.5, A, 0.7, 0.3) / std::pow(2.0, 1.0 / 0.7)).epsilon(1e-12));
    SUBCASE("agrees with numerical inversion") {
        DigitalEconomyParams p;
        p.c_bar = explosive_cost_threshold(p.s, p.A, p.alpha);
        CHECK(steady_state_growth(p) == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(p.c_bar == doctest::Approx(bisect_cost(p, 0.3)).epsilon(1e-9));
    }
    SUBCASE("with depreciation") {
        DigitalEconomyParams p;
        p.s = 0.4;
        p.delta_L = p.delta_K = 0.3;
        CHECK(explosive_cost_threshold(p) == doctest::Approx(bisect_cost(p, 0.3)).epsilon(1e-9));
        CHECK(explosive_cost_threshold(p) < explosive_cost_threshold(p.s, p.A, p.alpha));
    }
}

TEST_CASE("minimum saving rate") {
    const double A = 2337.0;
    CHECK(std::abs(min_saving_rate(1.5e4, A, 0.7) / 0.2 - 1.0) < 0.01);
    CHECK(std::abs(min_saving_rate(1.5e5, A, 0.7) - 1.0) < 0.02);
    double previous = 1.0;
    for (double c_bar = 1e4; c_bar > 1e-20; c_bar /= 100.0) {
        const double s = min_saving_rate(c_bar, A, 0.7);
        CHECK(s < previous);
        previous = s;
    }
    CHECK(previous < 1e-15);
    SUBCASE("round trip") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> cost(3.0, 5.0); // log10 c_bar
        for (int i = 0; i < 100; ++i) {
            DigitalEconomyParams p;
            p.c_bar = std::pow(10.0, cost(rng));
            p.s = min_saving_rate(p.c_bar, p.A, p.alpha);
            if (p.s >= 1.0) continue;
            CHECK(std::abs(steady_state_growth(p) - 0.3) < 1e-6);
        }
    }
}

TEST_CASE("growth is decreasing in cost and increasing in saving") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        DigitalEconomyParams a, b;
        a.c_bar = std::pow(10.0, 2.0 + 4.0 * u(rng));
        b.c_bar = a.c_bar * (1.0 + 0.5 * u(rng) + 1e-6);
        a.s = b.s = 0.01 + 0.98 * u(rng);
        CHECK(steady_state_growth(a) > steady_state_growth(b));
        DigitalEconomyParams c = a;
        c.s = a.s + (0.995 - a.s) * (u(rng) + 1e-3) / 1.001;
        CHECK(steady_state_growth(c) > steady_state_growth(a));
    }
}

TEST_CASE("compute cost of a digital worker") {
    CHECK(worker_cost_from_hardware(2e18, 3e22) == doctest::Approx(1.5e4).epsilon(1e-12));
    const double high = worker_cost_from_hardware(2e18, 3.15e23);
    CHECK(high == doctest::Approx(157500.0).epsilon(1e-12));
    CHECK(round_sig(high, 2) == 1.6e5);
    CHECK(worker_cost_from_hardware(4e18, 3e22) == doctest::Approx(7.5e3).epsilon(1e-12));
    CHECK_THROWS_AS(worker_cost_from_hardware(0.0, 3e22), Error);
}

TEST_CASE("hardware cost projection") {
    CHECK(project_hardware_cost(1.5e4, 2.5, 25.0) == doctest::Approx(1.5e4 / 1024.0).epsilon(1e-12));
    CHECK(std::abs(project_hardware_cost(1.5e4, 2.5, 25.0) - 14.6) < 0.05);
    CHECK(project_hardware_cost(123.0, 2.5, 0.0) == 123.0);
    CHECK(project_hardware_cost(1.5e4, 2.5, 2.5) == 7.5e3);
    SUBCASE("projecting cost commutes with projecting price-performance") {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const double p0 = std::pow(10.0, 16.0 + 4.0 * u(rng));
            const double brain = std::pow(10.0, 21.0 + 3.0 * u(rng));
            const double halving = 0.5 + 5.0 * u(rng);
            const double horizon = 40.0 * u(rng);
            const double via_cost = project_hardware_cost(worker_cost_from_hardware(p0, brain), halving, horizon);
            const double via_perf = worker_cost_from_hardware(project_price_performance(p0, halving, horizon), brain);
            CHECK(via_cost == doctest::Approx(via_perf).epsilon(1e-12));
        }
    }
}

TEST_CASE("simulated digital economy") {
    SUBCASE("calibrated run converges to the closed form") {
        DigitalEconomyParams p;
        const auto r = simulate(p, 50.0);
        REQUIRE(r.reason == Termination::horizon_reached);
        const double g = steady_state_growth(p);
        CHECK(std::abs(trailing_log_growth(r.trajectory, 10.0) - g) < 0.01);
        const auto L = r.trajectory.state_column("L");
        const auto K = r.trajectory.state_column("K");
        const double target = p.f / ((1.0 - p.f) * p.c_bar);
        CHECK(std::abs(L.back() / K.back() / target - 1.0) < 0.01);
    }
    SUBCASE("L/K converges for other costs and shares") {
        for (double c_bar : {5e3, 1.5e4, 6e4}) {
            DigitalEconomyParams p;
            p.c_bar = c_bar;
            p.s = 0.3;
            const auto r = simulate(p, 50.0);
            const auto L = r.trajectory.state_column("L");
            const auto K = r.trajectory.state_column("K");
            CAPTURE(c_bar);
            CHECK(std::abs(L.back() / K.back() / (p.f / ((1.0 - p.f) * c_bar)) - 1.0) < 0.01);
        }
    }
    SUBCASE("depreciation with doubled saving stays explosive") {
        DigitalEconomyParams p;
        p.s = 0.4;
        p.delta_L = p.delta_K = 0.3;
        CHECK(detect_explosive(simulate(p, 50.0).trajectory).explosive);
    }
    SUBCASE("low saving at high cost is not explosive") {
        DigitalEconomyParams p;
        p.s = 0.01;
        p.c_bar = 1.5e5;
        CHECK_FALSE(detect_explosive(simulate(p, 50.0).trajectory).explosive);
    }
}
