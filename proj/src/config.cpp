// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config: bad boolean '" + v + "'");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults(const std::string& experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "fig2-analytic") {
        c.n_measurements = 20;
        c.n_trajectories = 100000;  // MC trials per n
    } else if (experiment == "fig3-wavefunction") {
        c.hamiltonian = HamiltonianSpec::xyz(12, 0.47, -0.37, -0.79, true);
        c.mode = ScheduleMode::Pair;
        c.temperatures = {0.1, -0.1};
        c.n_measurements = 10;
        c.n_trajectories = 50;
    } else if (experiment == "fig4-heating") {
        c.hamiltonian = HamiltonianSpec::xyz(12, 0.47, -0.37, -0.79, true);
        c.mode = ScheduleMode::Single;
        c.temperatures = {0.1};
        c.n_measurements = 10;
        c.n_trajectories = 100;
    } else if (experiment != "custom") {
        throw std::invalid_argument("unknown experiment '" + experiment + "'");
    }
    return c;
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig c) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "experiment") c.experiment = val;
        else if (key == "kind") {
            if (val == "field") c.hamiltonian.kind = HamiltonianKind::Field;
            else if (val == "xyz") c.hamiltonian.kind = HamiltonianKind::XYZ;
            else throw std::invalid_argument("config: kind must be field|xyz");
        }
        else if (key == "n_sites") c.hamiltonian.n_sites = std::stoi(val);
        else if (key == "h_z") c.hamiltonian.h_z = std::stod(val);
        else if (key == "j_x") c.hamiltonian.j_x = std::stod(val);
        else if (key == "j_y") c.hamiltonian.j_y = std::stod(val);
        else if (key == "j_z") c.hamiltonian.j_z = std::stod(val);
        else if (key == "periodic") c.hamiltonian.periodic = parse_bool(val);
        else if (key == "mode") {
            if (val == "single") c.mode = ScheduleMode::Single;
            else if (val == "pair") c.mode = ScheduleMode::Pair;
            else throw std::invalid_argument("config: mode must be single|pair");
        }
        else if (key == "delay_low") c.delay_low = std::stod(val);
        else if (key == "delay_high") c.delay_high = std::stod(val);
        else if (key == "temperatures") {
            c.temperatures.clear();
            for (const auto& t : split(val, ',')) c.temperatures.push_back(std::stod(t));
        }
        else if (key == "n_measurements") c.n_measurements = std::stoi(val);
        else if (key == "n_trajectories") c.n_trajectories = std::stoi(val);
        else if (key == "bin_count") c.bin_count = std::stoi(val);
        else if (key == "dt") c.dt = std::stod(val);
        else if (key == "n_time_samples") c.n_time_samples = std::stoi(val);
        else if (key == "window_alpha") c.window_alpha = std::stod(val);
        else if (key == "master_seed") c.master_seed = std::stoull(val);
        else if (key == "output_path") c.output_path = val;
        else if (key == "size_list") {
            c.size_list.clear();
            for (const auto& t : split(val, ',')) c.size_list.push_back(std::stoi(t));
        }
        else if (key == "estimator") {
            if (val != "exact" && val != "spectral")
                throw std::invalid_argument("config: estimator must be exact|spectral");
            c.estimator = val;
        }
        else if (key == "energy_pairs") {
            c.energy_pairs.clear();
            for (const auto& pair : split(val, ',')) {
                const auto parts = split(pair, ':');
                if (parts.size() != 2)
                    throw std::invalid_argument("config: energy_pairs entries are e1:e2");
                c.energy_pairs.emplace_back(std::stod(parts[0]), std::stod(parts[1]));
            }
        }
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return c;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

std::string config_to_text(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "experiment = " << c.experiment << "\n";
    out << "kind = " << (c.hamiltonian.kind == HamiltonianKind::Field ? "field" : "xyz") << "\n";
    out << "n_sites = " << c.hamiltonian.n_sites << "\n";
    out << "h_z = " << fmt(c.hamiltonian.h_z) << "\n";
    out << "j_x = " << fmt(c.hamiltonian.j_x) << "\n";
    out << "j_y = " << fmt(c.hamiltonian.j_y) << "\n";
    out << "j_z = " << fmt(c.hamiltonian.j_z) << "\n";
    out << "periodic = " << (c.hamiltonian.periodic ? "true" : "false") << "\n";
    out << "mode = " << (c.mode == ScheduleMode::Single ? "single" : "pair") << "\n";
    out << "delay_low = " << fmt(c.delay_low) << "\n";
    out << "delay_high = " << fmt(c.delay_high) << "\n";
    out << "temperatures = ";
    for (std::size_t i = 0; i < c.temperatures.size(); ++i)
        out << (i ? "," : "") << fmt(c.temperatures[i]);
    out << "\n";
    out << "n_measurements = " << c.n_measurements << "\n";
    out << "n_trajectories = " << c.n_trajectories << "\n";
    out << "bin_count = " << c.bin_count << "\n";
    out << "dt = " << fmt(c.dt) << "\n";
    out << "n_time_samples = " << c.n_time_samples << "\n";
    out << "window_alpha = " << fmt(c.window_alpha) << "\n";
    out << "master_seed = " << c.master_seed << "\n";
    out << "output_path = " << c.output_path << "\n";
    out << "size_list = ";
    for (std::size_t i = 0; i < c.size_list.size(); ++i) out << (i ? "," : "") << c.size_list[i];
    out << "\n";
    out << "estimator = " << c.estimator << "\n";
    out << "energy_pairs = ";
    for (std::size_t i = 0; i < c.energy_pairs.size(); ++i)
        out << (i ? "," : "") << fmt(c.energy_pairs[i].first) << ":" << fmt(c.energy_pairs[i].second);
    out << "\n";
    return out.str();
}

}  // namespace stab
