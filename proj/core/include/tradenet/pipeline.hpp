#pragma once

#include "tradenet/ergm.hpp"
#include "tradenet/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace tradenet {

struct PipelineConfig {
    std::filesystem::path edges;
    std::filesystem::path partition;
    std::filesystem::path output_dir;
    std::string baseline;       // empty = first label observed in the partition file
    double alpha = 0.05;
    std::uint64_t seed = 0;
    int threads = 0;

    bool ergm_enabled = true;
    std::vector<TermSpec> ergm_terms; // empty = the full default term set
    int ergm_samples = 1000;
    std::int64_t ergm_burnin = -1;
    std::int64_t ergm_interval = -1;

    int degree_samples = 1000;
    int swaps_per_edge = 100;
};

// Parses and validates the JSON config; errors name the offending path
// (e.g. "ergm.samples: must be a positive integer"). Relative input and
// output paths are resolved against the config file's directory.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Full structural-plus-regional term set: edges, mutual, gw in/out degree,
// gwesp, gwdsp, sender and receiver factors, decays 0.5.
std::vector<TermSpec> default_term_set();

struct StageTiming {
    std::string name;
    std::int64_t ms = 0;
};

struct RunManifest {
    std::vector<std::string> artifacts; // file names relative to output_dir
    std::vector<StageTiming> stages;
    std::vector<std::string> warnings;
    std::filesystem::path manifest_path;
};

// Executes the full workflow: load, disparity filter, descriptives, E-I,
// rich core, brokerage, ERGM fit + simulated null (unless disabled),
// degree-preserving null, and role significance profiles against every
// simulated ensemble. Every artifact is listed in manifest.json; a stage
// failure writes manifest.json.partial (completed stages, failing stage,
// cause) and rethrows the stage error with its stage name attached.
RunManifest run_pipeline(const PipelineConfig& config);

} // namespace tradenet
