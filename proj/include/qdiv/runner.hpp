#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdiv/io_json.hpp"

namespace qdiv {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;  // number of grid points, >= 2

    std::vector<double> points() const;
};

struct RunConfig {
    std::string model;  // dephasing | decay | raw-family | canonical
    GridSpec grid;
    int level_min = 2;
    int level_max = 2;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    bool pairwise = false;
    std::optional<int> split;  // raw-family: optional sub_dim analysis

    json payload;       // model-specific section of the config
    std::string hash;   // fnv1a64 of the canonical config dump, hex
};

// Throws ConfigParse. Model-specific payload is validated lazily in run().
RunConfig parse_config(const json& j);

struct ScanRecord {
    double time = 0.0;
    std::vector<double> min_eig;     // one per level
    std::vector<bool> divisible;
};

struct WitnessInterval {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::vector<int> levels;  // levels that fail somewhere inside
};

struct Report {
    std::string model;
    std::vector<int> levels;
    std::vector<ScanRecord> records;
    std::vector<WitnessInterval> witness_intervals;
    bool hierarchy_consistent = true;
    json extra;  // model-specific results (family verdicts, rates, ...)
};

// Runs the configured scan, writes <out_dir>/report.json and
// <out_dir>/scan.csv (written atomically), returns the report.
Report run(const RunConfig& config, const std::string& out_dir);

constexpr const char* kToolVersion = "0.1.0";

} // namespace qdiv
