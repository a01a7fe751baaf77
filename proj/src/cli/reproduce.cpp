#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fixtures.hpp"
#include "growthlab/ces.hpp"
#include "growthlab/delays.hpp"
#include "growthlab/digital_workers.hpp"
#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/kernels.hpp"
#include "growthlab/semi_endog.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace growthlab::cli {

namespace fx = fixtures;

namespace {

double round_sig(double x, int digits) {
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
    return std::round(x * scale) / scale;
}

double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Generic comparison table. Rows with an empty tolerance are informational
// and do not affect the verdict.
class Comparison {
public:
    void relative(const std::string& quantity, double computed, double published, double tolerance,
                  const std::string& note = "") {
        push(quantity, computed, published, "relative", tolerance, relative_error(computed, published) <= tolerance, note);
    }
    void absolute(const std::string& quantity, double computed, double published, double tolerance,
                  const std::string& note = "") {
        push(quantity, computed, published, "absolute", tolerance, std::abs(computed - published) <= tolerance, note);
    }
    void exact(const std::string& quantity, double computed, double published, const std::string& note = "") {
        push(quantity, computed, published, "exact", 0.0, computed == published, note);
    }
    void holds(const std::string& quantity, bool ok, const std::string& note) {
        rows_.push_back({quantity, "", "", "property", "", ok ? "yes" : "no", note});
        passed_ = passed_ && ok;
    }
    void info(const std::string& quantity, double computed, double published, const std::string& note) {
        rows_.push_back({quantity, format_number(computed), format_number(published), "info", "", "n/a", note});
    }
    bool passed() const { return passed_; }
    std::string csv() const {
        std::string out = "quantity,computed,published,mode,tolerance,pass,note\n";
        for (const auto& r : rows_)
            out += r.quantity + ',' + r.computed + ',' + r.published + ',' + r.mode + ',' + r.tolerance + ',' +
                   r.pass + ',' + quote(r.note) + '\n';
        return out;
    }

private:
    struct Row {
        std::string quantity, computed, published, mode, tolerance, pass, note;
    };
    static std::string quote(const std::string& s) { return s.empty() ? s : '"' + s + '"'; }
    void push(const std::string& q, double c, double p, const char* mode, double tol, bool ok, const std::string& note) {
        rows_.push_back({q, format_number(c), format_number(p), mode, format_number(tol), ok ? "yes" : "no", note});
        passed_ = passed_ && ok;
    }
    std::vector<Row> rows_;
    bool passed_ = true;
};

struct Reproduction {
    std::vector<Artifact> artifacts;
    bool passed = true;
};

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    return os.str();
}

svg::Series series_of(const Trajectory& traj, std::string label) {
    const auto t = traj.times();
    const auto y = traj.output();
    return {std::move(label), {t.begin(), t.end()}, {y.begin(), y.end()}};
}

Reproduction table2_calibration() {
    Comparison cmp;
    digital::UsCalibration cal{fx::kGdp, fx::kCapital, fx::kWorkers, fx::kAlpha};
    const double A = digital::calibrate_A(cal);
    const double B = digital::b_alpha(fx::kAlpha);
    cmp.relative("A", A, fx::kA, fx::kCalibrationTolerance);
    cmp.relative("B_alpha", B, fx::kBAlpha, fx::kCalibrationTolerance);
    cmp.relative("A*B_alpha at s=1", fx::kA * B, fx::kCoefficient, fx::kCalibrationTolerance);
    cal.labor = digital::kLaborForceWorkers;
    cmp.info("A with labor-force count", digital::calibrate_A(cal), fx::kA,
             "tabulated labor force instead of employment");
    cmp.relative("explosive cost threshold at s=1", digital::explosive_cost_threshold(1.0, fx::kA, fx::kAlpha),
                 fx::kThresholdCost, fx::kThresholdTolerance);
    cmp.relative("minimum saving rate", digital::min_saving_rate(fx::kWorkerCost, fx::kA, fx::kAlpha),
                 fx::kMinSavingRate, fx::kCalibrationTolerance);
    cmp.exact("worker cost from hardware", digital::worker_cost_from_hardware(fx::kHardwarePricePerf, fx::kBrainRate),
              fx::kWorkerCost);

    digital::DigitalEconomyParams p;
    p.A = fx::kA;
    p.alpha = fx::kAlpha;
    p.s = fx::kMinSavingRate;
    p.c_bar = fx::kWorkerCost;
    const auto r = digital::simulate(p, 50.0);
    cmp.absolute("final-decade log growth", trailing_log_growth(r.trajectory, 10.0), fx::kExplosiveGrowth,
                 fx::kGrowthTolerance, "mean of d ln Y per year over the last ten years");
    cmp.holds("explosive growth detected", detect_explosive(r.trajectory).explosive, "annual growth above 30%");

    return {{{"trajectory.csv", trajectory_csv(r.trajectory)},
             {"comparison.csv", cmp.csv()},
             {"trajectory.svg", svg::line_chart({"Digital workers at the explosive threshold", "years", "output ($/yr)", true},
                                                {series_of(r.trajectory, "Y")})}},
            cmp.passed()};
}

Reproduction table3() {
    const std::vector<double> fs{0.05, 0.10, 0.25}, rhos{-0.2, -0.4, -2.0};
    const auto table = ces::table3(fs, rhos);
    std::ostringstream os;
    ces::write_table_csv(os, table);

    std::string cmp = "f,rho,computed,published,digits,rounded,raw_rel_error,rounded_rel_error,tolerance,pass\n";
    bool passed = true;
    for (const auto& cell : fx::kLevelTable) {
        const double got = ces::level_effect(cell.f, cell.rho);
        const double rounded = round_sig(got, cell.digits);
        const double err = relative_error(rounded, cell.printed);
        const bool ok = err <= fx::kLevelTableTolerance;
        passed = passed && ok;
        cmp += format_number(cell.f) + ',' + format_number(cell.rho) + ',' + format_number(got) + ',' +
               format_number(cell.printed) + ',' + std::to_string(cell.digits) + ',' + format_number(rounded) + ',' +
               format_number(relative_error(got, cell.printed)) + ',' + format_number(err) + ',' +
               format_number(fx::kLevelTableTolerance) + ',' + (ok ? "yes" : "no") + '\n';
    }

    std::vector<std::string> groups;
    for (double f : fs) groups.push_back("f=" + format_number(f));
    std::vector<svg::Series> series;
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        svg::Series s{"rho=" + format_number(rhos[j]), {}, {}};
        for (std::size_t i = 0; i < fs.size(); ++i) s.y.push_back(table.multipliers[i][j]);
        series.push_back(std::move(s));
    }
    return {{{"table3.csv", os.str()},
             {"comparison.csv", cmp},
             {"table3.svg", svg::bar_chart({"Scale-up from automating all but a fraction f", "unautomated fraction",
                                            "output multiplier", true},
                                           groups, series)}},
            passed};
}

Reproduction fig_transitory() {
    const std::vector<double> rhos{-0.2, -0.5, -1.0, -2.0};
    std::vector<double> fs;
    for (int k = 1; k <= 100; ++k) fs.push_back(k / 100.0);
    const auto table = ces::table3(fs, rhos);
    std::ostringstream os;
    ces::write_table_csv(os, table);

    // Finite automation boost alongside the unbounded curve at rho = -1.
    std::string boost_csv = "f,unbounded,m=" + format_number(fx::kCaveatBoost) + '\n';
    svg::Series unbounded{"rho=-1", {}, {}}, finite{"rho=-1, m=" + format_number(fx::kCaveatBoost), {}, {}};
    for (double f : fs) {
        const double u = ces::level_effect(f, fx::kHeadlineRho);
        const double b = ces::finite_boost_level_effect(f, fx::kHeadlineRho, fx::kCaveatBoost);
        boost_csv += format_number(f) + ',' + format_number(u) + ',' + format_number(b) + '\n';
        unbounded.x.push_back(f);
        unbounded.y.push_back(u);
        finite.x.push_back(f);
        finite.y.push_back(b);
    }

    Comparison cmp;
    cmp.exact("level effect f=0.1 rho=-1", ces::level_effect(fx::kHeadlineF, fx::kHeadlineRho), fx::kHeadlineEffect);
    cmp.exact("finite boost at full automation", ces::finite_boost_level_effect(0.0, fx::kHeadlineRho, fx::kCaveatBoost),
              fx::kCaveatBoost, "a finite boost caps the level effect");
    bool bounded = true, decreasing = true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        bounded = bounded && finite.y[i] <= std::min(fx::kCaveatBoost, unbounded.y[i]) * (1.0 + 1e-12);
        for (std::size_t j = 0; j < rhos.size() && i > 0; ++j)
            decreasing = decreasing && table.multipliers[i][j] <= table.multipliers[i - 1][j];
    }
    cmp.holds("finite boost bounded", bounded, "never above min(m, unbounded effect)");
    cmp.holds("level effect decreasing in f", decreasing, "for every rho");

    std::vector<svg::Series> series;
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        svg::Series s{"rho=" + format_number(rhos[j]), fs, {}};
        for (std::size_t i = 0; i < fs.size(); ++i) s.y.push_back(table.multipliers[i][j]);
        series.push_back(std::move(s));
    }
    series.push_back(finite);
    return {{{"level_effects.csv", os.str()},
             {"finite_boost.csv", boost_csv},
             {"comparison.csv", cmp.csv()},
             {"level_effects.svg", svg::line_chart({"Level effects of partial automation", "unautomated fraction f",
                                                    "output multiplier", true},
                                                   series)}},
            cmp.passed()};
}

Reproduction fig_schedule() {
    const std::vector<double> rhos(fx::kScheduleRhos.begin(), fx::kScheduleRhos.end());
    std::vector<Trajectory> runs(rhos.size());
    kernels::parallel_for(rhos.size(), [&](std::size_t j) {
        runs[j] = ces::automation_schedule(rhos[j], fx::kScheduleBoost, fx::kScheduleYears, 1.0 / fx::kScheduleYears);
    });

    std::string csv = "t_years,automated_fraction";
    for (double rho : rhos) csv += ",rho=" + format_number(rho);
    csv += '\n';
    const auto a = runs.front().state_column("automated_fraction");
    for (std::size_t k = 0; k < a.size(); ++k) {
        csv += format_number(runs.front().times()[k]) + ',' + format_number(a[k]);
        for (const auto& r : runs) csv += ',' + format_number(r.output()[k]);
        csv += '\n';
    }

    Comparison cmp;
    std::vector<svg::Series> series;
    std::vector<double> shares;
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        const std::string label = "rho=" + format_number(rhos[j]);
        cmp.relative("final multiplier " + label, runs[j].output().back(), fx::kScheduleBoost, 1e-9);
        shares.push_back(ces::back_loaded_share(runs[j]));
        cmp.info("growth share in last 10% " + label, shares.back(), 0.1, "0.1 would be evenly spread in log terms");
        series.push_back(series_of(runs[j], label));
    }
    cmp.holds("more complementarity is more back-loaded", std::is_sorted(shares.begin(), shares.end()),
              "share rises as rho falls");
    cmp.relative("rho for sigma=1/6", ces::rho_from_sigma(1.0 / 6.0), -5.0, 1e-12);
    cmp.relative("rho for sigma=2/3", ces::rho_from_sigma(2.0 / 3.0), -0.5, 1e-12);
    return {{{"schedule.csv", csv},
             {"comparison.csv", cmp.csv()},
             {"schedule.svg", svg::line_chart({"Output as tasks are automated at a constant rate", "years",
                                               "Y / Y(0)", true},
                                              series)}},
            cmp.passed()};
}

Reproduction appendix_c() {
    Comparison cmp;
    std::string csv = "n,g_a,g_k,g_y,g_y_over_n\n";
    for (double n : {0.005, 0.01, 0.02}) {
        const auto r = semi_endog::steady_state_rates(fx::kSteadyAlpha, fx::kSteadyGamma, fx::kSteadyPhi, n);
        csv += format_number(n) + ',' + format_number(r.g_a) + ',' + format_number(r.g_k) + ',' +
               format_number(r.g_y) + ',' + format_number(r.g_y / n) + '\n';
        if (n == 0.01) {
            cmp.absolute("g_y/n", r.g_y / n, 10.0 / 7.0, fx::kSteadyTolerance, "closed form gives 1.4286");
            cmp.relative("g_a at n=0.01", r.g_a, n, 1e-15, "equal up to rounding of 1 - phi");
            cmp.info("g_y/n as printed", r.g_y / n, fx::kPrintedGyOverN, "the printed 1.5 is a rounding of 1.4286");
        }
    }
    return {{{"steady_state.csv", csv}, {"comparison.csv", cmp.csv()}}, cmp.passed()};
}

Reproduction appendix_e() {
    Comparison cmp;
    const double As = fx::kDelayA * fx::kDelayS;
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    cmp.absolute("discount at eta=As", delays::delay_discount(fx::kDelayA, fx::kDelayS, As), golden,
                 fx::kDiscountTolerance);
    cmp.info("discount as printed", delays::delay_discount(fx::kDelayA, fx::kDelayS, As), fx::kPrintedDiscount,
             "printed to three digits");

    delays::DelayParams p;
    p.A = fx::kDelayA;
    p.s = fx::kDelayS;
    p.eta = As;
    const auto r = delays::simulate_delay(p, 60.0);
    cmp.relative("simulated growth", delays::fitted_growth(r.trajectory), delays::asymptotic_growth(p.A, p.s, p.eta),
                 fx::kFitTolerance, "log-slope fit against the eigenvalue");

    std::string sweep = "eta,growth,discount,halving_months\n";
    svg::Series discount{"discount", {}, {}};
    for (int k = -20; k <= 20; ++k) {
        const double eta = As * std::pow(10.0, k / 10.0);
        const double d = delays::delay_discount(p.A, p.s, eta);
        sweep += format_number(eta) + ',' + format_number(delays::asymptotic_growth(p.A, p.s, eta)) + ',' +
                 format_number(d) + ',' + format_number(12.0 * delays::halving_time(eta)) + '\n';
        discount.x.push_back(eta);
        discount.y.push_back(d);
    }
    return {{{"trajectory.csv", trajectory_csv(r.trajectory)},
             {"discount_sweep.csv", sweep},
             {"comparison.csv", cmp.csv()},
             {"discount.svg", svg::line_chart({"Growth discount from investment delay", "eta (1/yr)",
                                               "growth / instant-adjustment growth", false},
                                              {discount})}},
            cmp.passed()};
}

} // namespace

const std::vector<std::string>& known_targets() {
    static const std::vector<std::string> targets{"table2-calibration", "table3",     "fig-transitory",
                                                  "fig-schedule",       "appendixC", "appendixE"};
    return targets;
}

RunManifest reproduce(const std::string& target, const std::filesystem::path& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    Reproduction rep;
    if (target == "table2-calibration")
        rep = table2_calibration();
    else if (target == "table3")
        rep = table3();
    else if (target == "fig-transitory")
        rep = fig_transitory();
    else if (target == "fig-schedule")
        rep = fig_schedule();
    else if (target == "appendixC")
        rep = appendix_c();
    else if (target == "appendixE")
        rep = appendix_e();
    else
        throw CliError(kUnknownModel, "unknown target '" + target + "'");

    RunManifest manifest;
    manifest.command = "reproduce";
    manifest.config = {{"target", target}};
    manifest.comparison_passed = rep.passed;
    manifest.duration_seconds = seconds_since(start);
    commit(rep.artifacts, out_dir, manifest);
    return manifest;
}

} // namespace growthlab::cli
