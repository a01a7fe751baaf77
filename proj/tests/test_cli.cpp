#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "growthlab/ces.hpp"
#include "growthlab/cli.hpp"

using namespace growthlab;
using namespace growthlab::cli;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test case.
struct Scratch {
    fs::path root;
    explicit Scratch(const std::string& name) : root(fs::temp_directory_path() / ("growthlab_test_" + name)) {
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~Scratch() { fs::remove_all(root); }
    fs::path write(const std::string& file, const std::string& text) const {
        std::ofstream(root / file) << text;
        return root / file;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "growthlab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::main(static_cast<int>(argv.size()), argv.data());
}

bool empty_or_missing(const fs::path& p) { return !fs::exists(p) || fs::is_empty(p); }

// Last column of a two-column summary row.
double summary_value(const fs::path& csv, const std::string& quantity) {
    std::istringstream in(slurp(csv));
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(quantity + ',', 0) == 0) return std::stod(line.substr(quantity.size() + 1));
    FAIL("missing summary row " << quantity);
    return 0.0;
}

} // namespace

TEST_CASE("config parsing") {
    const auto c = parse_config(nlohmann::json::parse(R"({"model":"delay","parameters":{"eta":0.5},"horizon":10})"));
    CHECK(c.model == "delay");
    CHECK(*c.horizon == 10.0);
    CHECK(c.parameters["eta"] == 0.5);
    CHECK(c.output_grid == 512);

    auto code_of = [](const char* text) {
        try {
            parse_config(nlohmann::json::parse(text));
        } catch (const CliError& e) {
            return static_cast<int>(e.code());
        }
        return 0;
    };
    CHECK(code_of(R"({"model":"solow"})") == kUnknownModel);
    CHECK(code_of(R"({"parameters":{}})") == kUnknownModel);
    CHECK(code_of(R"({"model":"delay","parameters":{"etta":0.5}})") == kInvalidParameter);
    CHECK(code_of(R"({"model":"delay","parameters":{"eta":"fast"}})") == kInvalidParameter);
    CHECK(code_of(R"({"model":"delay","horizon":-1})") == kInvalidParameter);
    CHECK(code_of(R"({"model":"delay","output_grid":1})") == kInvalidParameter);
    CHECK(code_of(R"({"model":"delay","colour":"red"})") == kInvalidParameter);
    CHECK(code_of(R"({"model":"beliefs","seed":-3})") == kInvalidParameter);
}

TEST_CASE("exit codes") {
    Scratch s("exit_codes");
    const auto good = s.write("good.json", R"({"model":"delay","parameters":{},"horizon":5})");
    const auto unknown = s.write("unknown.json", R"({"model":"solow"})");
    const auto bad_name = s.write("bad_name.json", R"({"model":"digital","parameters":{"alfa":0.7}})");
    const auto bad_value = s.write("bad_value.json", R"({"model":"digital","parameters":{"s":1.5}})");
    const auto malformed = s.write("malformed.json", R"({"model":)");

    CHECK(invoke({"run", good.string(), "--out", (s.root / "ok").string()}) == kOk);
    CHECK(fs::exists(s.root / "ok" / "manifest.json"));
    CHECK(invoke({"run", unknown.string(), "--out", (s.root / "a").string()}) == kUnknownModel);
    CHECK(invoke({"reproduce", "table9", "--out", (s.root / "b").string()}) == kUnknownModel);
    CHECK(invoke({"run", bad_name.string(), "--out", (s.root / "c").string()}) == kInvalidParameter);
    CHECK(invoke({"run", bad_value.string(), "--out", (s.root / "d").string()}) == kInvalidParameter);
    CHECK(invoke({"run", malformed.string(), "--out", (s.root / "e").string()}) == kInvalidParameter);
    for (const char* dir : {"a", "b", "c", "d", "e"}) {
        CAPTURE(dir);
        CHECK(empty_or_missing(s.root / dir));
    }

    // A regular file where the output directory should go.
    const auto blocker = s.write("blocker", "x");
    CHECK(invoke({"run", good.string(), "--out", (blocker / "sub").string()}) == kUnwritable);
    CHECK(invoke({"reproduce", "table3", "--out", (blocker / "sub").string()}) == kUnwritable);
    CHECK(invoke({}) == kUsage);
}

TEST_CASE("reruns give identical bytes and hashes") {
    Scratch s("rerun");
    for (const char* text : {R"({"model":"beliefs","parameters":{"marginals":[0.2,0.3],"latent_corr":0.4,"n_samples":20000},"seed":5})",
                             R"({"model":"semi-endog","parameters":{"beta":0.9},"horizon":50})",
                             R"({"model":"ces-schedule","parameters":{"rho":[-1,-3]}})"}) {
        const auto config = parse_config(nlohmann::json::parse(text));
        const auto a = run(config, s.root / "a");
        const auto b = run(config, s.root / "b");
        REQUIRE(a.outputs.size() == b.outputs.size());
        for (std::size_t i = 0; i < a.outputs.size(); ++i) {
            CAPTURE(a.outputs[i].name);
            CHECK(a.outputs[i].sha256 == b.outputs[i].sha256);
            CHECK(slurp(s.root / "a" / a.outputs[i].name) == slurp(s.root / "b" / b.outputs[i].name));
            CHECK(sha256_hex(slurp(s.root / "a" / a.outputs[i].name)) == a.outputs[i].sha256);
        }
        const auto manifest = nlohmann::json::parse(slurp(s.root / "a" / "manifest.json"));
        CHECK(manifest["version"] == kVersion);
        CHECK(manifest["outputs"].size() == a.outputs.size());
        CHECK(manifest["config"]["model"] == config.model);
        fs::remove_all(s.root / "a");
        fs::remove_all(s.root / "b");
    }
}

TEST_CASE("sha256 of known strings") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("GROWTHLAB_SEED overrides the config seed") {
    Scratch s("seed");
    const auto config = parse_config(nlohmann::json::parse(
        R"({"model":"beliefs","parameters":{"marginals":[0.2,0.3],"latent_corr":0.4,"n_samples":20000},"seed":5})"));
    const auto from_config = run(config, s.root / "config");

    auto with_seed = config;
    with_seed.seed = 11;
    const auto direct = run(with_seed, s.root / "direct");

    ::setenv("GROWTHLAB_SEED", "11", 1);
    const auto from_env = run(config, s.root / "env");
    ::setenv("GROWTHLAB_SEED", "eleven", 1);
    CHECK_THROWS_AS(run(config, s.root / "bad"), CliError);
    ::unsetenv("GROWTHLAB_SEED");

    CHECK(*from_env.seed == 11);
    CHECK(*from_config.seed == 5);
    CHECK(slurp(s.root / "env" / "aggregate.csv") == slurp(s.root / "direct" / "aggregate.csv"));
    CHECK(slurp(s.root / "env" / "aggregate.csv") != slurp(s.root / "config" / "aggregate.csv"));
    CHECK(empty_or_missing(s.root / "bad"));
}

TEST_CASE("digital defaults grow at about 30% in the final decade") {
    Scratch s("digital");
    run(parse_config(nlohmann::json::parse(R"({"model":"digital"})")), s.root);
    CHECK(std::abs(summary_value(s.root / "summary.csv", "final_decade_log_growth") - 0.30) < 0.01);
    const auto traj = slurp(s.root / "trajectory.csv");
    CHECK(traj.rfind("t_years,Y,L,K\n", 0) == 0);
}

TEST_CASE("ces-level output equals the level table") {
    Scratch s("ces_level");
    run(parse_config(nlohmann::json::parse(
            R"({"model":"ces-level","parameters":{"f":[0.05,0.1,0.25],"rho":[-0.2,-0.4,-2]}})")),
        s.root / "run");
    reproduce("table3", s.root / "rep");
    const std::vector<double> fs{0.05, 0.1, 0.25}, rhos{-0.2, -0.4, -2.0};
    std::ostringstream direct;
    ces::write_table_csv(direct, ces::table3(fs, rhos));
    CHECK(slurp(s.root / "run" / "level_effects.csv") == direct.str());
    CHECK(slurp(s.root / "rep" / "table3.csv") == direct.str());
}

TEST_CASE("every reproduce target passes its comparison") {
    Scratch s("reproduce");
    for (const auto& target : known_targets()) {
        CAPTURE(target);
        const auto m = reproduce(target, s.root / target);
        CHECK(m.comparison_passed);
        CHECK(m.duration_seconds < 10.0);
        CHECK(fs::exists(s.root / target / "manifest.json"));
        bool has_csv = false;
        for (const auto& f : m.outputs) has_csv = has_csv || f.name.ends_with(".csv");
        CHECK(has_csv);
    }
    const auto c = slurp(s.root / "appendixC" / "comparison.csv");
    CHECK(c.find("1.4285714") != std::string::npos);
    CHECK(c.find("1.5") != std::string::npos);
}

TEST_CASE("svg outputs are well formed") {
    Scratch s("svg");
    reproduce("fig-schedule", s.root);
    const auto svg = slurp(s.root / "schedule.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("rho=-5") != std::string::npos);
}
