#include "mhz/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mhz/errors.hpp"

namespace mhz {

std::string config_to_json(const run_config& cfg) {
    nlohmann::ordered_json j;
    j["schema_version"] = cfg.schema_version;
    j["xi"] = cfg.xi;
    j["error_exponent_a"] = cfg.error_exponent_a;
    j["error_prefactor_b"] = cfg.error_prefactor_b;
    j["cost_cap"] = cfg.cost_cap;
    j["cutoff_plateau"] = cfg.cutoff_plateau;
    j["cutoff_support"] = cfg.cutoff_support;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["out_dir"] = cfg.out_dir;
    return j.dump(2) + "\n";
}

run_config config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
    run_config cfg;
    try {
        if (j.contains("schema_version")) cfg.schema_version = j["schema_version"];
        if (j.contains("xi")) cfg.xi = j["xi"];
        if (j.contains("error_exponent_a")) cfg.error_exponent_a = j["error_exponent_a"];
        if (j.contains("error_prefactor_b")) cfg.error_prefactor_b = j["error_prefactor_b"];
        if (j.contains("cost_cap")) cfg.cost_cap = j["cost_cap"];
        if (j.contains("cutoff_plateau")) cfg.cutoff_plateau = j["cutoff_plateau"];
        if (j.contains("cutoff_support")) cfg.cutoff_support = j["cutoff_support"];
        if (j.contains("seed")) cfg.seed = j["seed"];
        if (j.contains("threads")) cfg.threads = j["threads"];
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"];
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
    if (!(cfg.xi > 0.0 && cfg.xi < 1.0))
        throw parse_error("config: xi must lie in (0,1)");
    if (!(cfg.cutoff_support > cfg.cutoff_plateau && cfg.cutoff_plateau > 0.0))
        throw parse_error("config: cutoff must satisfy 0 < plateau < support");
    if (cfg.threads < 1) throw parse_error("config: threads must be >= 1");
    return cfg;
}

run_config load_config() {
    const char* path = std::getenv("MHZ_CONFIG");
    if (path == nullptr || path[0] == '\0') return run_config{};
    std::ifstream in(path);
    if (!in) throw parse_error(std::string("config: cannot open ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

}  // namespace mhz
