#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "growthlab/cli.hpp"

namespace growthlab::cli {

struct Artifact {
    std::string name;
    std::string content;
};

/// Writes every artifact plus manifest.json into out_dir, filling in the
/// manifest's output list. Throws kUnwritable if the directory cannot be
/// created or written.
void commit(const std::vector<Artifact>& artifacts, const std::filesystem::path& out_dir, RunManifest& manifest);

/// Seconds elapsed since `start`.
double seconds_since(std::chrono::steady_clock::time_point start);

} // namespace growthlab::cli
