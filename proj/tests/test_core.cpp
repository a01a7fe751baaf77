#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/semi_endog.hpp"

using namespace growthlab;

namespace {

Trajectory yearly(std::vector<double> y, double start = 0.0) {
    std::vector<double> t(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) t[i] = start + static_cast<double>(i);
    return Trajectory(std::move(t), std::move(y));
}

// Analytic solution of dY/dt = Y^c, Y(0) = 1, sampled up to 90% of the way
// to blow-up (or over [0, 5] for c = 1).
Trajectory power_law_solution(double c, std::size_t n = 512) {
    const double t_end = c == 1.0 ? 5.0 : 0.9 / (c - 1.0);
    std::vector<double> t(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = t_end * static_cast<double>(i) / static_cast<double>(n - 1);
        y[i] = c == 1.0 ? std::exp(t[i]) : std::pow(1.0 - (c - 1.0) * t[i], -1.0 / (c - 1.0));
    }
    return Trajectory(std::move(t), std::move(y));
}

} // namespace

TEST_CASE("trajectory invariants are enforced") {
    CHECK_THROWS_AS(Trajectory({0.0, 1.0}, {1.0}), Error);
    CHECK_THROWS_AS(Trajectory({0.0, 0.0}, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(Trajectory({0.0, 1.0}, {1.0, -2.0}), Error);
    CHECK_THROWS_AS(Trajectory({0.0, 1.0}, {1.0, 2.0}, StateSeries{{"A"}, {{1.0}, {1.0, 2.0}}}), Error);
}

TEST_CASE("trajectory csv round trip keeps state columns") {
    Trajectory traj({0.0, 0.5, 1.25}, {1.0, 1.1, 1.3},
                    StateSeries{{"A", "K"}, {{1.0, 2.0}, {1.5, 2.5}, {2.0, 3.0}}});
    std::stringstream ss;
    write_trajectory_csv(ss, traj);
    CHECK(ss.str().substr(0, 14) == "t_years,Y,A,K\n");
    const Trajectory back = read_trajectory_csv(ss);
    REQUIRE(back.size() == traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(back.times()[i] == traj.times()[i]);
        CHECK(back.output()[i] == traj.output()[i]);
    }
    CHECK(back.state_column("K") == traj.state_column("K"));
}

TEST_CASE("trajectory csv rejects a bad header") {
    std::stringstream ss("time,Y\n0,1\n");
    CHECK_THROWS_AS(read_trajectory_csv(ss), Error);
}

TEST_CASE("annual growth rates") {
    SUBCASE("constant two percent") {
        const auto g = annual_growth_rates(yearly({1.0, 1.02, 1.0404}));
        REQUIRE(g.size() == 2);
        CHECK(g[0].growth == doctest::Approx(0.02).epsilon(1e-12));
        CHECK(g[1].growth == doctest::Approx(0.02).epsilon(1e-12));
    }
    SUBCASE("doubling") {
        const auto g = annual_growth_rates(yearly({1.0, 2.0, 4.0}));
        CHECK(g[0].growth == 1.0);
        CHECK(g[1].growth == 1.0);
        CHECK(g[1].year == 2.0);
    }
    SUBCASE("crash and partial recovery") {
        const auto g = annual_growth_rates(yearly({100.0, 50.0, 80.0}));
        CHECK(g[0].growth == doctest::Approx(-0.5));
        CHECK(g[1].growth == doctest::Approx(0.6));
    }
    SUBCASE("fewer than two samples") {
        CHECK_THROWS_WITH_AS(annual_growth_rates(Trajectory({0.0}, {1.0})), "insufficient data", Error);
    }
    SUBCASE("sub-annual sampling is interpolated geometrically") {
        // Y = e^{0.1 t} sampled every 0.3 years.
        std::vector<double> t, y;
        for (int i = 0; i <= 20; ++i) {
            t.push_back(0.3 * i);
            y.push_back(std::exp(0.03 * i));
        }
        const auto g = annual_growth_rates(Trajectory(t, y));
        REQUIRE(g.size() == 6);
        for (const auto& row : g) CHECK(row.growth == doctest::Approx(std::exp(0.1) - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("detect_explosive examples") {
    SUBCASE("two percent for fifty years") {
        std::vector<double> y{1.0};
        for (int i = 0; i < 50; ++i) y.push_back(y.back() * 1.02);
        const auto a = detect_explosive(yearly(y));
        CHECK_FALSE(a.explosive);
        CHECK_FALSE(a.first_explosive_year.has_value());
        CHECK(a.peak_annual_growth == doctest::Approx(0.02));
    }
    SUBCASE("annual doubling") {
        const auto a = detect_explosive(yearly({1.0, 2.0, 4.0, 8.0}));
        CHECK(a.explosive);
        REQUIRE(a.first_explosive_year.has_value());
        CHECK(*a.first_explosive_year == 1.0);
    }
    SUBCASE("crash recovery is excluded by the running max") {
        const auto a = detect_explosive(yearly({100.0, 50.0, 80.0}));
        CHECK_FALSE(a.explosive);
        CHECK(a.peak_annual_growth == doctest::Approx(0.6));
        CHECK(a.running_max_series == std::vector<double>{100.0, 100.0, 100.0});
    }
    SUBCASE("recovery above the old peak counts") {
        const auto a = detect_explosive(yearly({100.0, 50.0, 131.0}));
        CHECK(a.explosive);
        CHECK(*a.first_explosive_year == 2.0);
    }
}

TEST_CASE("detect_explosive is invariant under output scaling") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> growth(-0.4, 0.6);
    std::uniform_real_distribution<double> scale(-20.0, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> y{1.0};
        for (int i = 0; i < 30; ++i) y.push_back(y.back() * (1.0 + growth(rng)));
        const double k = std::pow(10.0, scale(rng));
        std::vector<double> scaled(y);
        for (auto& v : scaled) v *= k;
        const auto a = detect_explosive(yearly(y));
        const auto b = detect_explosive(yearly(scaled));
        CHECK(a.explosive == b.explosive);
        CHECK(a.first_explosive_year == b.first_explosive_year);
    }
}

TEST_CASE("detect_explosive is invariant under prepending lower years") {
    // Prepended levels stay within [Y0 / 1.3, min Y], so the first original
    // year is never itself a 30% jump over the new history.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> growth(0.0, 0.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> y{100.0};
        for (int i = 0; i < 25; ++i) y.push_back(y.back() * (1.0 + growth(rng)));
        const double low = y.front() / 1.3, high = *std::min_element(y.begin(), y.end());
        std::vector<double> prefix(1 + trial % 5);
        for (auto& v : prefix) v = low + (high - low) * unit(rng);
        std::vector<double> extended(prefix);
        extended.insert(extended.end(), y.begin(), y.end());
        const auto a = detect_explosive(yearly(y, 0.0));
        const auto b = detect_explosive(yearly(extended, -static_cast<double>(prefix.size())));
        CHECK(a.explosive == b.explosive);
        CHECK(a.first_explosive_year == b.first_explosive_year);
    }
}

TEST_CASE("fit_power_law_exponent on analytic solutions") {
    SUBCASE("exponential") {
        CHECK(fit_power_law_exponent(power_law_solution(1.0)).exponent == doctest::Approx(1.0).epsilon(0.01));
    }
    SUBCASE("dY/dt = Y^2") {
        const auto fit = fit_power_law_exponent(power_law_solution(2.0));
        CHECK(std::abs(fit.exponent - 2.0) < 0.02);
        CHECK(fit.r_squared > 0.999);
    }
    SUBCASE("relative accuracy within two percent across exponents") {
        for (double c : {1.0, 1.25, 1.5, 2.0}) {
            CAPTURE(c);
            const double got = fit_power_law_exponent(power_law_solution(c)).exponent;
            CHECK(std::abs(got - c) / c < 0.02);
        }
    }
    SUBCASE("simulated degree-2 multifactor economy") {
        semi_endog::MultiFactorParams p;
        p.degree = 2.0;
        const auto run = semi_endog::simulate_multifactor(p, 50.0);
        CHECK(std::abs(fit_power_law_exponent(run.trajectory).exponent - 1.5) < 0.05);
    }
}

TEST_CASE("fit_power_law_exponent error paths") {
    CHECK_THROWS_AS(fit_power_law_exponent(yearly({1, 2, 3, 4, 5, 6, 7, 8, 9})), Error);
    // Declining output gives no positive derivative estimates.
    std::vector<double> falling;
    for (int i = 0; i < 20; ++i) falling.push_back(100.0 - i);
    CHECK_THROWS_AS(fit_power_law_exponent(yearly(falling)), Error);
}

TEST_CASE("likelihood scale") {
    CHECK(likelihood_term(0.05).term == Likelihood::very_unlikely);
    CHECK(likelihood_term(0.5).term == Likelihood::about_as_likely_as_not);
    CHECK(likelihood_term(0.995).term == Likelihood::virtually_certain);
    CHECK(to_string(likelihood_term(0.5).term) == "about as likely as not");

    SUBCASE("bands are lower-inclusive") {
        CHECK(likelihood_term(0.0).term == Likelihood::exceptionally_unlikely);
        CHECK(likelihood_term(0.01).term == Likelihood::very_unlikely);
        CHECK(likelihood_term(0.10).term == Likelihood::unlikely);
        CHECK(likelihood_term(1.0 / 3.0).term == Likelihood::about_as_likely_as_not);
        CHECK(likelihood_term(2.0 / 3.0).term == Likelihood::likely);
        CHECK(likelihood_term(0.90).term == Likelihood::very_likely);
        CHECK(likelihood_term(0.99).term == Likelihood::virtually_certain);
        CHECK(likelihood_term(1.0).term == Likelihood::virtually_certain);
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(likelihood_term(-0.01), Error);
        CHECK_THROWS_AS(likelihood_term(1.01), Error);
    }
    SUBCASE("monotone") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            double a = u(rng), b = u(rng);
            if (a > b) std::swap(a, b);
            CHECK(static_cast<int>(likelihood_term(a).term) <= static_cast<int>(likelihood_term(b).term));
        }
    }
}
