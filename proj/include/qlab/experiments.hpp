#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlab/queue.hpp"
#include "qlab/synth.hpp"
#include "qlab/trace.hpp"

namespace qlab {

struct SweepPoint {
    double x = 0.0;                    // sample size or blocksize, packets
    std::vector<double> rep_means;     // mean_q per replication
    double mean_of_means = 0.0;
    std::optional<double> std_dev;     // absent when n_reps == 1
};

using ConfigKV = std::vector<std::pair<std::string, std::string>>;

struct SweepResult {
    std::vector<SweepPoint> points;
    ConfigKV config;  // provenance: seed, utilization, source, grids
};

struct GeneratorSpec {
    OnOffParams params;
    PacketizationParams pack;
};

using SampleSource = std::variant<Trace, GeneratorSpec>;

// Mean-queue vs sample size with replicated windows (traces) or fresh
// traces (generators). Bandwidth is calibrated per window to the target
// utilization. The full-trace point gets exactly one replication and no
// std_dev.
SweepResult sweep_sample_size(const SampleSource& source,
                              const std::vector<std::size_t>& sizes,
                              int n_reps, double target_utilization,
                              std::uint64_t base_seed);

// Mean-queue vs shuffle blocksize. Bandwidth is calibrated once on the
// unshuffled trace and reused for every shuffle, so only ordering varies.
SweepResult sweep_blocksize(const Trace& trace,
                            const std::vector<std::size_t>& blocksizes,
                            int n_reps, double target_utilization,
                            std::uint64_t base_seed);

struct HurstEstimate {
    double h = 0.5;           // clamped to (0,1); out_of_range set if clamped
    double slope = -1.0;      // variance-time slope
    std::vector<std::size_t> levels;
    double base_bin = 0.0;
    bool out_of_range = false;
};

// Variance-time estimator: variance of m-aggregated bin-count means vs m
// on a log-log scale; H = 1 + slope/2.
HurstEstimate hurst_variance_time(const Trace& trace, double base_bin,
                                  const std::vector<std::size_t>& levels);

// Arithmetic mean and sample (n-1) standard deviation; std_dev absent
// for a single replication.
std::pair<double, std::optional<double>> summarize_replications(
    const std::vector<double>& means);

// CSV: header "x,mean_of_means,std_dev,n_reps,rep_means...". The config
// goes to a sidecar of key=value lines.
void save_sweep(const SweepResult& result, const std::string& path);
void save_config_sidecar(const ConfigKV& config, const std::string& path);

}  // namespace qlab
