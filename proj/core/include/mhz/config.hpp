#pragma once

#include <cstdint>
#include <string>

namespace mhz {

/*
 * Run-wide knobs shared by the tools: evaluator window exponent xi and error
 * constants (A, B) so every artifact records the bound B * T^-A it was
 * produced under, cutoff shape, cost cap, RNG seed, and thread count.
 * Serialized into every JSON artifact for reproducibility.
 */
struct run_config {
    double xi = 0.3;
    double error_exponent_a = 2.0;
    double error_prefactor_b = 1.0;
    double cost_cap = 1e8;
    double cutoff_plateau = 2.0;
    double cutoff_support = 3.0;
    std::uint64_t seed = 0x5eed;
    int threads = 1;
    std::string out_dir = ".";
    std::string schema_version = "1";
};

std::string config_to_json(const run_config& cfg);
run_config config_from_json(const std::string& text);  // throws parse_error

// default config, overridden by the JSON file named in $MHZ_CONFIG (if set);
// a missing or unreadable file throws parse_error naming the path
run_config load_config();

}  // namespace mhz
