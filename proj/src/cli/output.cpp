#include "output.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

namespace growthlab::cli {

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1)
        throw std::runtime_error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["artifact"] = "growthlab";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["duration_seconds"] = duration_seconds;
    j["outputs"] = nlohmann::json::array();
    for (const auto& f : outputs) j["outputs"].push_back({{"file", f.name}, {"bytes", f.bytes}, {"sha256", f.sha256}});
    if (command == "reproduce") j["comparison_passed"] = comparison_passed;
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    os << content;
    os.close();
    if (!os) throw CliError(kUnwritable, "cannot write " + path.string());
}

} // namespace

void commit(const std::vector<Artifact>& artifacts, const std::filesystem::path& out_dir, RunManifest& manifest) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw CliError(kUnwritable, "cannot create output directory " + out_dir.string());
    manifest.outputs.clear();
    for (const auto& a : artifacts) {
        write_file(out_dir / a.name, a.content);
        manifest.outputs.push_back({a.name, sha256_hex(a.content), a.content.size()});
    }
    write_file(out_dir / "manifest.json", manifest.to_json().dump(2) + "\n");
}

} // namespace growthlab::cli
