#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace growthlab::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kUnknownModel = 2, // also unknown reproduce target
    kInvalidParameter = 3,
    kUnwritable = 4,
};

/// Carries the exit code the command line should return.
class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

inline constexpr const char* kVersion = "0.1.0";

struct ScenarioConfig {
    std::string model;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<double> horizon; // years; model default when absent
    std::size_t output_grid = 512;
    std::optional<std::uint64_t> seed;
};

/// Models accepted by `run`.
const std::vector<std::string>& known_models();
/// Targets accepted by `reproduce`.
const std::vector<std::string>& known_targets();

/// Parses and validates a config document. Unknown models raise
/// kUnknownModel; anything else wrong raises kInvalidParameter.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Reads GROWTHLAB_SEED. Throws kInvalidParameter if it is set but not an
/// unsigned integer.
std::optional<std::uint64_t> seed_from_environment();

struct OutputFile {
    std::string name;
    std::string sha256;
    std::uintmax_t bytes;
};

struct RunManifest {
    std::string command; // "run" or "reproduce"
    nlohmann::json config;
    std::optional<std::uint64_t> seed;
    double duration_seconds = 0.0;
    std::vector<OutputFile> outputs;
    bool comparison_passed = true; // reproduce only

    nlohmann::json to_json() const;
};

/// Runs a scenario and writes CSV, SVG and manifest.json into out_dir.
/// Nothing is written unless the whole computation succeeds.
RunManifest run(const ScenarioConfig& config, const std::filesystem::path& out_dir);

/// Regenerates a published exhibit plus comparison.csv against the stored
/// published values.
RunManifest reproduce(const std::string& target, const std::filesystem::path& out_dir);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Command-line entry point; returns the process exit code.
int main(int argc, char** argv);

} // namespace growthlab::cli
