// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stab/hamiltonian.hpp"
#include "stab/measurement.hpp"

namespace stab {

/// Full description of a batch run. Every output is a deterministic function
/// of (config, master_seed).
struct ExperimentConfig {
    std::string experiment = "custom";  // fig2-analytic | fig3-wavefunction | fig4-heating | custom

    HamiltonianSpec hamiltonian = HamiltonianSpec::xyz(12, 0.47, -0.37, -0.79, true);

    ScheduleMode mode = ScheduleMode::Pair;
    double delay_low = 0.0;
    double delay_high = 2.0;

    std::vector<double> temperatures = {0.1, -0.1};
    int n_measurements = 10;
    int n_trajectories = 50;
    int bin_count = 64;
    double dt = 0.025;
    int n_time_samples = 2048;
    double window_alpha = 3.0;
    std::uint64_t master_seed = 1;
    std::string output_path = "out";

    std::vector<int> size_list = {8, 10, 12};           // fig4 size sweep
    std::string estimator = "exact";                    // exact | spectral
    std::vector<std::pair<double, double>> energy_pairs =  // fig2 peak pairs
        {{-0.9, 0.9}, {-0.9, 0.0}, {-0.9, -0.6}};

    static ExperimentConfig defaults(const std::string& experiment);
};

/// Parses the flat `key = value` config format. Unknown keys are an error.
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base);
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base);

/// Key-value echo used for the run manifest (parseable back).
std::string config_to_text(const ExperimentConfig& config);

}  // namespace stab
