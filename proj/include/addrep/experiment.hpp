#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "addrep/harness.hpp"
#include "addrep/report.hpp"
#include "addrep/sequence.hpp"

namespace addrep {

inline constexpr const char* kToolVersion = "0.1.0";

// Builtin sequence families, materialised up to `bound`:
//   full                        positive integers
//   complement-of-powers        positive integers minus {2, 4, 8, ...}
//   complement-of-greedy-sidon  positive integers minus the greedy Sidon sequence
// Throws ConfigError for an unknown name.
IntegerSequence make_family(const std::string& family, std::uint64_t bound);
const std::vector<std::string>& builtin_families();

// Every greedy Sidon term <= cap.
IntegerSequence greedy_sidon_up_to(std::uint64_t cap);

const std::vector<std::string>& known_checks();

struct ExperimentConfig {
    std::string family = "full";
    std::string path;  // family == "file"
    std::uint64_t n = 1024;
    std::vector<std::string> checks = {"all"};
    double c1 = 0.0;
    bool calibrate = false;
    double eps = 0.1;
    double tol = kDefaultTolerance;
    TRange t_range = TRange::up_to_m;
    // Empty grids fall back to defaults derived from n.
    std::vector<std::uint64_t> n_grid;        // lemma5
    std::vector<std::uint64_t> calibration_grid;  // c1 calibration
    std::vector<double> y_grid;               // lemma6 / theorem2
    std::vector<double> ineq33_grid;
    std::vector<double> x_grid;               // lemma1
    std::optional<std::uint64_t> degree;      // identity28
    unsigned threads = 1;                     // does not affect output
};

// Parses {"family": ..., "checks": [...], "N": ..., ...}; unknown keys,
// families or checks raise ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

struct ExperimentBundle {
    nlohmann::json json;
    std::vector<VerificationReport> reports;
    std::map<std::string, std::string> tables;  // file name -> CSV text
};

// Runs every requested check. Output depends only on the sequence, the config
// (minus thread count) and the tool version.
ExperimentBundle run_experiment(const ExperimentConfig& cfg);

// Writes report.json plus each CSV table into `dir` (created if missing).
void write_bundle(const ExperimentBundle& bundle, const std::filesystem::path& dir);

// Grid parsing for the CLI: "a,b,c" or "start:step:stop" (inclusive).
std::vector<double> parse_grid(const std::string& spec);

}  // namespace addrep
