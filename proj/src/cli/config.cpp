#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>

#include "growthlab/cli.hpp"

namespace growthlab::cli {

namespace {

enum class Kind { number, numbers, number_or_numbers, text, texts, count };

using Schema = std::map<std::string, Kind>;

const std::map<std::string, Schema>& schemas() {
    static const std::map<std::string, Schema> all{
        {"semi-endog",
         {{"beta", Kind::number}, {"phi", Kind::number}, {"lambda", Kind::number},
          {"saving_share_ideas", Kind::number}, {"saving_share_factors", Kind::number},
          {"A0", Kind::number}, {"K0", Kind::number}}},
        {"multifactor",
         {{"degree", Kind::number}, {"endowments", Kind::numbers}, {"returns", Kind::numbers},
          {"saving_rate", Kind::number}, {"form", Kind::text}}},
        {"digital",
         {{"A", Kind::number}, {"alpha", Kind::number}, {"s", Kind::number}, {"f", Kind::number},
          {"c_bar", Kind::number}, {"delta_L", Kind::number}, {"delta_K", Kind::number},
          {"L0", Kind::number}, {"K0", Kind::number}}},
        {"ces-level", {{"f", Kind::number_or_numbers}, {"rho", Kind::number_or_numbers}, {"m", Kind::number}}},
        {"ces-schedule", {{"rho", Kind::number_or_numbers}, {"m", Kind::number}, {"rate", Kind::number}}},
        {"delay", {{"A", Kind::number}, {"s", Kind::number}, {"eta", Kind::number}, {"K0", Kind::number}, {"I0", Kind::number}}},
        {"beliefs",
         {{"marginals", Kind::numbers}, {"names", Kind::texts}, {"latent_corr", Kind::number},
          {"n_samples", Kind::count}, {"shards", Kind::count}}},
    };
    return all;
}

bool is_number(const nlohmann::json& v) { return v.is_number(); }

bool is_numbers(const nlohmann::json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& x : v)
        if (!x.is_number()) return false;
    return true;
}

bool matches(Kind kind, const nlohmann::json& v) {
    switch (kind) {
    case Kind::number: return is_number(v);
    case Kind::numbers: return is_numbers(v);
    case Kind::number_or_numbers: return is_number(v) || is_numbers(v);
    case Kind::text: return v.is_string();
    case Kind::texts:
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (!x.is_string()) return false;
        return true;
    case Kind::count: return v.is_number_unsigned() && v.get<std::uint64_t>() >= 1;
    }
    return false;
}

[[noreturn]] void invalid(const std::string& what) { throw CliError(kInvalidParameter, what); }

} // namespace

const std::vector<std::string>& known_models() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : schemas()) out.push_back(name);
        return out;
    }();
    return names;
}

ScenarioConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) invalid("config must be an object");
    if (!doc.contains("model") || !doc["model"].is_string()) throw CliError(kUnknownModel, "config has no model");
    ScenarioConfig cfg;
    cfg.model = doc["model"].get<std::string>();
    const auto schema = schemas().find(cfg.model);
    if (schema == schemas().end()) throw CliError(kUnknownModel, "unknown model '" + cfg.model + "'");

    for (const auto& [key, value] : doc.items()) {
        if (key == "model") continue;
        if (key == "parameters") {
            if (!value.is_object()) invalid("parameters must be an object");
            for (const auto& [name, v] : value.items()) {
                const auto kind = schema->second.find(name);
                if (kind == schema->second.end())
                    invalid("unknown parameter '" + name + "' for model " + cfg.model);
                if (!matches(kind->second, v)) invalid("parameter '" + name + "' has the wrong type");
            }
            cfg.parameters = value;
        } else if (key == "horizon") {
            if (!value.is_number() || !(value.get<double>() > 0.0)) invalid("horizon must be a positive number");
            cfg.horizon = value.get<double>();
        } else if (key == "output_grid") {
            if (!value.is_number_unsigned() || value.get<std::uint64_t>() < 2)
                invalid("output_grid must be an integer of at least 2");
            cfg.output_grid = value.get<std::size_t>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) invalid("seed must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else {
            invalid("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) invalid("cannot read config " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* raw = std::getenv("GROWTHLAB_SEED");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (errno != 0 || *end != '\0' || raw[0] == '-') invalid("GROWTHLAB_SEED must be an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

} // namespace growthlab::cli
