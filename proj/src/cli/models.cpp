#include <cmath>
#include <sstream>

#include "growthlab/beliefs.hpp"
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

namespace {

using nlohmann::json;

double number(const json& params, const char* name, double fallback) {
    return params.contains(name) ? params[name].get<double>() : fallback;
}

std::vector<double> numbers(const json& params, const char* name, std::vector<double> fallback) {
    if (!params.contains(name)) return fallback;
    const auto& v = params[name];
    if (v.is_number()) return {v.get<double>()};
    return v.get<std::vector<double>>();
}

// Two-column summary table; values are written as given.
class Summary {
public:
    void add(const std::string& quantity, double value) { add(quantity, format_number(value)); }
    void add(const std::string& quantity, const std::string& value) { rows_.emplace_back(quantity, value); }
    std::string csv() const {
        std::string out = "quantity,value\n";
        for (const auto& [q, v] : rows_) out += q + ',' + v + '\n';
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    return os.str();
}

svg::Series output_series(const Trajectory& traj, std::string label = "Y") {
    const auto t = traj.times();
    const auto y = traj.output();
    return {std::move(label), {t.begin(), t.end()}, {y.begin(), y.end()}};
}

// Growth diagnostics shared by the simulated models. Short or odd runs
// leave entries as "n/a" instead of failing the whole scenario.
void describe_growth(Summary& s, const IntegrationResult& r) {
    s.add("termination", std::string(to_string(r.reason)));
    s.add("blowup_time_years", r.blowup_time ? format_number(*r.blowup_time) : "none");
    s.add("accepted_steps", static_cast<double>(r.accepted_steps));
    try {
        const auto a = detect_explosive(r.trajectory);
        s.add("explosive", a.explosive ? "yes" : "no");
        s.add("first_explosive_year", a.first_explosive_year ? format_number(*a.first_explosive_year) : "none");
        s.add("peak_annual_growth", a.peak_annual_growth);
    } catch (const Error&) {
        s.add("explosive", "n/a");
    }
    try {
        const auto fit = fit_power_law_exponent(r.trajectory);
        s.add("power_law_exponent", fit.exponent);
        s.add("power_law_r_squared", fit.r_squared);
    } catch (const Error&) {
        s.add("power_law_exponent", "n/a");
    }
}

std::vector<Artifact> simulation_outputs(const IntegrationResult& r, const Summary& s, const std::string& title) {
    return {{"trajectory.csv", trajectory_csv(r.trajectory)},
            {"summary.csv", s.csv()},
            {"trajectory.svg", svg::line_chart({title, "years", "output", true}, {output_series(r.trajectory)})}};
}

std::vector<Artifact> run_semi_endog(const ScenarioConfig& c, double horizon) {
    semi_endog::SemiEndogParams p;
    const auto& q = c.parameters;
    p.beta = number(q, "beta", p.beta);
    p.phi = number(q, "phi", p.phi);
    p.lambda = number(q, "lambda", p.lambda);
    p.saving_share_ideas = number(q, "saving_share_ideas", p.saving_share_ideas);
    p.saving_share_factors = number(q, "saving_share_factors", p.saving_share_factors);
    p.A0 = number(q, "A0", p.A0);
    p.K0 = number(q, "K0", p.K0);
    p.validate();
    const auto r = semi_endog::simulate_tfp_capital(p, horizon, c.output_grid);
    Summary s;
    s.add("returns_sum", p.lambda / p.phi + p.beta);
    s.add("regime", std::string(semi_endog::to_string(semi_endog::returns_condition(p.lambda, p.phi, p.beta))));
    describe_growth(s, r);
    return simulation_outputs(r, s, "TFP and capital accumulation");
}

std::vector<Artifact> run_multifactor(const ScenarioConfig& c, double horizon) {
    semi_endog::MultiFactorParams p;
    const auto& q = c.parameters;
    p.degree = number(q, "degree", p.degree);
    p.endowments = numbers(q, "endowments", p.endowments);
    p.returns = numbers(q, "returns", p.returns);
    p.saving_rate = number(q, "saving_rate", p.saving_rate);
    if (q.contains("form")) {
        const auto form = q["form"].get<std::string>();
        if (form == "cobb-douglas")
            p.form = semi_endog::ProductionForm::cobb_douglas;
        else if (form == "leontief")
            p.form = semi_endog::ProductionForm::leontief;
        else
            throw CliError(kInvalidParameter, "form must be cobb-douglas or leontief");
    }
    p.validate();
    const auto r = semi_endog::simulate_multifactor(p, horizon, c.output_grid);
    Summary s;
    s.add("hyperbolic_exponent", semi_endog::hyperbolic_exponent(p.degree));
    s.add("worst_case_exponent", semi_endog::worst_case_exponent(p.returns, p.degree));
    describe_growth(s, r);
    return simulation_outputs(r, s, "Accumulable factors");
}

std::vector<Artifact> run_digital(const ScenarioConfig& c, double horizon) {
    digital::DigitalEconomyParams p;
    const auto& q = c.parameters;
    p.A = number(q, "A", p.A);
    p.alpha = number(q, "alpha", p.alpha);
    p.s = number(q, "s", p.s);
    p.f = number(q, "f", p.f);
    p.c_bar = number(q, "c_bar", p.c_bar);
    p.delta_L = number(q, "delta_L", p.delta_L);
    p.delta_K = number(q, "delta_K", p.delta_K);
    p.L0 = number(q, "L0", p.L0);
    p.K0 = number(q, "K0", p.K0);
    p.validate();
    const auto r = digital::simulate(p, horizon, c.output_grid);
    Summary s;
    s.add("balanced_path_growth", digital::balanced_path_growth(p));
    s.add("balanced_L_over_K", p.f / ((1.0 - p.f) * p.c_bar));
    const auto L = r.trajectory.state_column("L");
    const auto K = r.trajectory.state_column("K");
    s.add("final_L_over_K", L.back() / K.back());
    try {
        s.add("final_decade_log_growth", trailing_log_growth(r.trajectory, std::min(10.0, std::floor(horizon))));
    } catch (const Error&) {
        s.add("final_decade_log_growth", "n/a");
    }
    describe_growth(s, r);
    return simulation_outputs(r, s, "Digital workers and capital");
}

std::vector<Artifact> run_ces_level(const ScenarioConfig& c) {
    const auto fs = numbers(c.parameters, "f", {0.05, 0.10, 0.25});
    const auto rhos = numbers(c.parameters, "rho", {-0.2, -0.4, -2.0});
    ces::LevelTable table;
    if (c.parameters.contains("m")) {
        const double m = c.parameters["m"].get<double>();
        table = {fs, rhos, std::vector<std::vector<double>>(fs.size(), std::vector<double>(rhos.size()))};
        kernels::parallel_for(fs.size() * rhos.size(), [&](std::size_t cell) {
            const std::size_t i = cell / rhos.size(), j = cell % rhos.size();
            table.multipliers[i][j] = ces::finite_boost_level_effect(fs[i], rhos[j], m);
        });
    } else {
        table = ces::table3(fs, rhos);
    }
    std::ostringstream os;
    ces::write_table_csv(os, table);
    std::vector<std::string> groups;
    for (double f : fs) groups.push_back("f=" + format_number(f));
    std::vector<svg::Series> series;
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        svg::Series s{"rho=" + format_number(rhos[j]), {}, {}};
        for (std::size_t i = 0; i < fs.size(); ++i) s.y.push_back(table.multipliers[i][j]);
        series.push_back(std::move(s));
    }
    return {{"level_effects.csv", os.str()},
            {"level_effects.svg", svg::bar_chart({"Output multiplier from automation", "unautomated fraction", "multiplier", true}, groups, series)}};
}

std::vector<Artifact> run_ces_schedule(const ScenarioConfig& c, double horizon) {
    const auto rhos = numbers(c.parameters, "rho", {-0.5, -1.0, -2.0, -5.0});
    const double m = number(c.parameters, "m", 100.0);
    const double rate = number(c.parameters, "rate", 1.0 / horizon);
    std::vector<Trajectory> runs(rhos.size());
    // Sweep points in parallel; the single writer below keeps grid order.
    kernels::parallel_for(rhos.size(), [&](std::size_t j) {
        runs[j] = ces::automation_schedule(rhos[j], m, horizon, rate, c.output_grid);
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
    Summary s;
    std::vector<svg::Series> series;
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        const std::string label = "rho=" + format_number(rhos[j]);
        s.add("final_ratio " + label, runs[j].output().back());
        s.add("back_loaded_share " + label, ces::back_loaded_share(runs[j]));
        series.push_back(output_series(runs[j], label));
    }
    return {{"schedule.csv", csv},
            {"summary.csv", s.csv()},
            {"schedule.svg", svg::line_chart({"Output during gradual automation", "years", "Y / Y(0)", true}, series)}};
}

std::vector<Artifact> run_delay(const ScenarioConfig& c, double horizon) {
    delays::DelayParams p;
    const auto& q = c.parameters;
    p.A = number(q, "A", p.A);
    p.s = number(q, "s", p.s);
    p.eta = number(q, "eta", p.eta);
    p.K0 = number(q, "K0", p.K0);
    p.I0 = number(q, "I0", p.I0);
    p.validate();
    const auto r = delays::simulate_delay(p, horizon, c.output_grid);
    Summary s;
    s.add("asymptotic_growth", delays::asymptotic_growth(p.A, p.s, p.eta));
    s.add("delay_discount", delays::delay_discount(p.A, p.s, p.eta));
    s.add("halving_time_months", 12.0 * delays::halving_time(p.eta));
    s.add("fitted_growth", delays::fitted_growth(r.trajectory));
    s.add("termination", std::string(to_string(r.reason)));
    return simulation_outputs(r, s, "Investment with adjustment delay");
}

std::vector<Artifact> run_beliefs(const ScenarioConfig& c, std::uint64_t seed) {
    beliefs::ArgumentSet args;
    const auto& q = c.parameters;
    if (!q.contains("marginals")) throw CliError(kInvalidParameter, "beliefs needs marginals");
    args.marginals = q["marginals"].get<std::vector<double>>();
    if (q.contains("names")) args.names = q["names"].get<std::vector<std::string>>();
    args.latent_corr = number(q, "latent_corr", args.latent_corr);
    if (q.contains("n_samples")) args.n_samples = q["n_samples"].get<std::size_t>();
    if (q.contains("shards")) args.shards = q["shards"].get<std::size_t>();
    args.seed = seed;
    args.validate();
    const auto rows = beliefs::aggregate(args);
    std::ostringstream os;
    beliefs::write_aggregate_csv(os, rows);
    std::vector<std::string> groups;
    svg::Series bars{"probability", {}, {}};
    for (std::size_t i = 0; i < args.marginals.size(); ++i) {
        groups.push_back(args.names.empty() ? "A" + std::to_string(i + 1) : args.names[i]);
        bars.y.push_back(args.marginals[i]);
    }
    for (const auto& row : rows) {
        groups.push_back(row.name);
        bars.y.push_back(row.estimate.probability);
    }
    return {{"aggregate.csv", os.str()},
            {"aggregate.svg", svg::bar_chart({"Blocker arguments and their disjunction", "", "probability", false}, groups, {bars})}};
}

double default_horizon(const std::string& model) {
    if (model == "semi-endog") return 200.0;
    if (model == "multifactor") return 100.0;
    if (model == "digital") return 50.0;
    if (model == "ces-schedule") return 80.0;
    if (model == "delay") return 60.0;
    return 0.0;
}

} // namespace

RunManifest run(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    const auto env_seed = seed_from_environment();
    const std::uint64_t seed = env_seed.value_or(config.seed.value_or(beliefs::ArgumentSet{}.seed));
    const double horizon = config.horizon.value_or(default_horizon(config.model));

    std::vector<Artifact> artifacts;
    try {
        if (config.model == "semi-endog")
            artifacts = run_semi_endog(config, horizon);
        else if (config.model == "multifactor")
            artifacts = run_multifactor(config, horizon);
        else if (config.model == "digital")
            artifacts = run_digital(config, horizon);
        else if (config.model == "ces-level")
            artifacts = run_ces_level(config);
        else if (config.model == "ces-schedule")
            artifacts = run_ces_schedule(config, horizon);
        else if (config.model == "delay")
            artifacts = run_delay(config, horizon);
        else if (config.model == "beliefs")
            artifacts = run_beliefs(config, seed);
        else
            throw CliError(kUnknownModel, "unknown model '" + config.model + "'");
    } catch (const Error& e) {
        throw CliError(kInvalidParameter, e.what());
    }

    RunManifest manifest;
    manifest.command = "run";
    manifest.config = {{"model", config.model}, {"parameters", config.parameters}, {"output_grid", config.output_grid}};
    if (horizon > 0.0) manifest.config["horizon"] = horizon;
    if (config.model == "beliefs") manifest.seed = seed;
    manifest.duration_seconds = seconds_since(start);
    commit(artifacts, out_dir, manifest);
    return manifest;
}

} // namespace growthlab::cli
