#include <iostream>

#include <CLI11.hpp>

#include "growthlab/cli.hpp"
#include "growthlab/error.hpp"

namespace growthlab::cli {

namespace {

void report(const RunManifest& manifest, const std::filesystem::path& out_dir) {
    for (const auto& f : manifest.outputs) std::cout << (out_dir / f.name).string() << '\n';
    std::cout << (out_dir / "manifest.json").string() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growthlab: explosive-growth model laboratory"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, target, out_dir;
    auto* run_cmd = app.add_subcommand("run", "Run a scenario described by a JSON config");
    run_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
    run_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto* rep_cmd = app.add_subcommand("reproduce", "Regenerate a published table or figure");
    std::string targets;
    for (const auto& t : known_targets()) targets += (targets.empty() ? "" : ", ") + t;
    rep_cmd->add_option("target", target, "One of: " + targets)->required();
    rep_cmd->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd) {
            const auto manifest = run(load_config(config_path), out_dir);
            report(manifest, out_dir);
        } else {
            const auto manifest = reproduce(target, out_dir);
            report(manifest, out_dir);
            if (!manifest.comparison_passed) std::cerr << "growthlab: comparison against published values failed\n";
        }
        return kOk;
    } catch (const CliError& e) {
        std::cerr << "growthlab: " << e.what() << '\n';
        return e.code();
    } catch (const Error& e) {
        std::cerr << "growthlab: invalid parameters: " << e.what() << '\n';
        return kInvalidParameter;
    } catch (const std::exception& e) {
        std::cerr << "growthlab: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace growthlab::cli
