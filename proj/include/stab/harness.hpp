// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stab/analytics.hpp"
#include "stab/config.hpp"
#include "stab/distribution.hpp"
#include "stab/measurement.hpp"

namespace stab {

inline constexpr const char* kVersion = "0.1.0";

/// One seeded trajectory: realized events, g(E) snapshots and derived series.
struct TrajectoryRecord {
    std::uint64_t seed = 0;
    std::vector<MeasurementEvent> events;
    EnergyDistribution initial;                 // snapshot before any measurement
    std::vector<int> snapshot_at;               // measurements completed per snapshot
    std::vector<EnergyDistribution> distributions;
    std::vector<double> delta_g_series;         // delta_g(snapshot, initial)
    std::vector<double> heating_series;         // (E_av,n - E_av,0)/span per snapshot
    double e_split = 0.0;                       // midpoint of the two initial peak means
};

struct Fig3Result {
    std::vector<TrajectoryRecord> records;
    double e_min = 0.0, e_max = 0.0;
    double wall_seconds = 0.0;
};

/// Two-peak state, pair measurements, g(E) snapshot after each even event.
Fig3Result run_fig3_experiment(const ExperimentConfig& config);

struct Fig4Row {
    int n_sites = 0;
    int n = 0;
    double drift_mean = 0.0;
    double drift_stderr = 0.0;
};

struct Fig4Result {
    std::vector<Fig4Row> rows;
    std::vector<TrajectoryRecord> records;  // per size x trajectory, in size-major order
    double wall_seconds = 0.0;
};

/// Canonical one-peak state, single-spin measurements, averaged heating drift
/// per system size in config.size_list.
Fig4Result run_fig4_experiment(const ExperimentConfig& config);

struct Fig2Row {
    int pair_id = 0;
    int n = 0;
    double mean = 0.0;
    double std_error = 0.0;
};

struct Fig2Fit {
    int pair_id = 0;
    double e1 = 0.0, e2 = 0.0;
    double lambda = 0.0;
    double kappa = 0.0;
};

struct Fig2Result {
    std::vector<Fig2Row> rows;
    std::vector<Fig2Fit> fits;
    double wall_seconds = 0.0;
};

/// Analytic two-peak model: averaged stability curves and lambda/kappa fits.
Fig2Result run_fig2_experiment(const ExperimentConfig& config);

/// Writes the experiment CSVs plus a run manifest into config.output_path
/// (or `out_dir` when nonempty). Returns the written file paths.
/// Throws on empty results or unwritable paths. CSV bytes are a pure
/// function of (config, master_seed).
std::vector<std::string> emit_fig2_outputs(const Fig2Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir = "");
std::vector<std::string> emit_fig3_outputs(const Fig3Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir = "");
std::vector<std::string> emit_fig4_outputs(const Fig4Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir = "");

/// Seed for trajectory `index` derived as an independent substream.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index);

/// Deterministic pairwise summation (order-independent aggregation helper).
double pairwise_sum(std::span<const double> values);

}  // namespace stab
