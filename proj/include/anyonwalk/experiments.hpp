#pragma once

#include <string>
#include <vector>

#include "anyonwalk/models.hpp"

namespace anyonwalk {

struct ExperimentConfig {
    std::string experiment;           // walk | mixing | exit | channel | entropy | oracle-check
    std::string model = "ising";
    int sites = 0;                    // finite-chain length (mixing/exit)
    int s0 = 0;                       // 0 = pick the default for the experiment
    int t_max = -1;                   // -1 = experiment default
    double epsilon = 0.01;
    std::string boundary = "";        // optional override
    std::string output_dir = ".";
    std::uint64_t memory_budget = 2'000'000'000;
    std::uint64_t seed = 1;           // sampling illustrations only
    int threads = 1;
    std::vector<int> levels = {2, 3, 4, 5};  // channel/entropy sweeps
};

struct RunManifest {
    std::string experiment;
    std::string config_echo;          // JSON
    std::string code_version;
    double wall_seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> output_digests;  // file, fnv1a-64
};

/// All diagnostics at once; empty means valid.
std::vector<std::string> validate(const ExperimentConfig& cfg);

/// Runs the experiment, writes output files + <experiment>_manifest.json into
/// cfg.output_dir, and returns the manifest.  Throws on invalid config.
RunManifest run_experiment(const ExperimentConfig& cfg);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

std::string version_string();

}  // namespace anyonwalk
