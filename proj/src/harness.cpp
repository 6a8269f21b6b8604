// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stab/evolution.hpp"
#include "stab/spectral.hpp"

namespace stab {

namespace {

constexpr int kMemoryCapSites = 24;  // 2^24 amplitudes = 256 MiB per state

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct EstimatorContext {
    Spectrum spectrum;   // with vectors when the exact estimator is active
    double e_min = 0.0, e_max = 0.0;
    bool exact = false;
    double bin_width = 0.0;
    double dt = 0.025;
    int n_time_samples = 2048;
    double alpha = 3.0;
    EnergyGrid grid;
};

EstimatorContext make_context(const ExperimentConfig& config, const HamiltonianSpec& spec) {
    EstimatorContext ctx;
    ctx.exact = config.estimator == "exact";
    ctx.dt = config.dt;
    ctx.n_time_samples = config.n_time_samples;
    ctx.alpha = config.window_alpha;
    if (ctx.exact) {
        ctx.spectrum = exact_spectrum(spec, true);
        ctx.e_min = ctx.spectrum.e_min;
        ctx.e_max = ctx.spectrum.e_max;
    } else {
        try {
            Spectrum values = exact_spectrum(spec, false);
            ctx.e_min = values.e_min;
            ctx.e_max = values.e_max;
        } catch (const std::invalid_argument&) {
            const double bound = spec.norm_bound();
            ctx.e_min = -bound;
            ctx.e_max = bound;
        }
    }
    ctx.bin_width = (ctx.e_max - ctx.e_min) / config.bin_count;
    ctx.grid = EnergyGrid::covering(ctx.e_min, ctx.e_max, ctx.bin_width);
    return ctx;
}

EnergyDistribution snapshot_distribution(const EstimatorContext& ctx,
                                         const HamiltonianSpec& spec, const SpinState& psi) {
    if (ctx.exact) return exact_binned_g(psi, ctx.spectrum, ctx.bin_width);
    AutocorrSeries series = autocorrelation_series(spec, psi, ctx.dt, ctx.n_time_samples);
    return spectral_g(series, ctx.alpha, ctx.grid);
}

/// One seeded trajectory: state prep, scheduled measurements, snapshots.
TrajectoryRecord run_trajectory(const ExperimentConfig& config, const HamiltonianSpec& spec,
                                const EstimatorContext& ctx, std::uint64_t seed) {
    TrajectoryRecord rec;
    rec.seed = seed;
    rng::Engine gen(seed);

    SpinState psi;
    if (config.temperatures.size() >= 2) {
        const SpinState raw_a =
            random_infinite_temperature_state(spec.n_sites, rng::mix(seed ^ 0x516b5f5fULL));
        const SpinState raw_b =
            random_infinite_temperature_state(spec.n_sites, rng::mix(seed ^ 0x7a31c9d2ULL));
        const SpinState psi_a = imaginary_time_prep(spec, raw_a, config.temperatures[0]);
        const SpinState psi_b = imaginary_time_prep(spec, raw_b, config.temperatures[1]);
        rec.e_split = 0.5 * (energy_expectation(spec, psi_a) + energy_expectation(spec, psi_b));
        psi = two_peak_superposition(psi_a, psi_b);
    } else {
        const SpinState raw =
            random_infinite_temperature_state(spec.n_sites, rng::mix(seed ^ 0x516b5f5fULL));
        psi = imaginary_time_prep(spec, raw, config.temperatures.at(0));
        rec.e_split = energy_expectation(spec, psi);
    }

    Schedule schedule =
        build_schedule(config.mode, config.n_measurements, spec.n_sites, config.delay_low,
                       config.delay_high, spec.periodic, gen);

    rec.initial = snapshot_distribution(ctx, spec, psi);
    const double e0 = distribution_moments(rec.initial).first;

    double now = 0.0;
    for (int e = 0; e < schedule.n_events; ++e) {
        now += schedule.delays[e];
        psi = evolve(spec, psi, schedule.delays[e], config.dt);
        const auto [theta, phi] = sample_axis(gen);
        auto [next, event] = measure_spin(psi, schedule.sites[e], theta, phi, gen, now);
        psi = std::move(next);
        rec.events.push_back(event);

        const bool snapshot =
            config.mode == ScheduleMode::Single ? true : ((e + 1) % 2 == 0);
        if (!snapshot) continue;
        EnergyDistribution g = snapshot_distribution(ctx, spec, psi);
        rec.snapshot_at.push_back(e + 1);
        rec.delta_g_series.push_back(delta_g(g, rec.initial));
        rec.heating_series.push_back((distribution_moments(g).first - e0) /
                                     (ctx.e_max - ctx.e_min));
        rec.distributions.push_back(std::move(g));
    }
    return rec;
}

std::vector<TrajectoryRecord> run_trajectories(const ExperimentConfig& config,
                                               const HamiltonianSpec& spec,
                                               const EstimatorContext& ctx) {
    std::vector<TrajectoryRecord> records(config.n_trajectories);
    std::vector<std::string> errors(config.n_trajectories);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < config.n_trajectories; ++t) {
        try {
            records[t] = run_trajectory(config, spec, ctx, trajectory_seed(config.master_seed, t));
        } catch (const std::exception& ex) {
            errors[t] = ex.what();
        }
    }
    for (const std::string& err : errors)
        if (!err.empty()) throw std::runtime_error("trajectory failed: " + err);
    return records;
}

void check_memory_budget(const HamiltonianSpec& spec, const ExperimentConfig& config) {
    if (spec.n_sites > kMemoryCapSites)
        throw std::invalid_argument(
            "n_sites = " + std::to_string(spec.n_sites) + " exceeds the memory budget (max " +
            std::to_string(kMemoryCapSites) + "); reduce --sites");
    if (config.estimator == "exact" && spec.n_sites > 13)
        throw std::invalid_argument(
            "exact estimator needs eigenvectors (n_sites <= 13); use --spectral for larger chains");
}

std::filesystem::path prepare_dir(const ExperimentConfig& config, const std::string& out_dir) {
    const std::filesystem::path dir = out_dir.empty() ? config.output_path : out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
    return dir;
}

void write_manifest(const std::filesystem::path& dir, const ExperimentConfig& config,
                    const std::vector<std::string>& files, double wall_seconds) {
    std::ofstream out(dir / "manifest.txt");
    if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
    out << "tool = stab " << kVersion << "\n";
    out << "master_seed = " << config.master_seed << "\n";
    out << "wall_time_seconds = " << wall_seconds << "\n";
    out << "outputs =";
    for (const auto& f : files) out << " " << f;
    out << "\n\n[config]\n" << config_to_text(config);
}

}  // namespace

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index) {
    return rng::mix(master_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Fig3Result run_fig3_experiment(const ExperimentConfig& config) {
    if (config.experiment == "fig3-wavefunction" &&
        config.hamiltonian.kind != HamiltonianKind::XYZ)
        throw std::invalid_argument("fig3 runs on the XYZ chain");
    check_memory_budget(config.hamiltonian, config);

    const auto t0 = std::chrono::steady_clock::now();
    Fig3Result result;
    const EstimatorContext ctx = make_context(config, config.hamiltonian);
    result.e_min = ctx.e_min;
    result.e_max = ctx.e_max;
    result.records = run_trajectories(config, config.hamiltonian, ctx);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

Fig4Result run_fig4_experiment(const ExperimentConfig& config) {
    if (config.temperatures.empty())
        throw std::invalid_argument("fig4 needs a temperature");
    if (config.mode != ScheduleMode::Single)
        throw std::invalid_argument("fig4 uses the single-spin schedule");

    ExperimentConfig local = config;
    local.temperatures = {config.temperatures[0]};

    const auto t0 = std::chrono::steady_clock::now();
    Fig4Result result;
    for (int n_sites : config.size_list) {
        HamiltonianSpec spec = config.hamiltonian;
        spec.n_sites = n_sites;
        check_memory_budget(spec, local);
        const EstimatorContext ctx = make_context(local, spec);
        std::vector<TrajectoryRecord> records = run_trajectories(local, spec, ctx);

        const int snapshots = config.n_measurements;
        std::vector<double> vals(records.size());
        for (int n = 0; n <= snapshots; ++n) {
            for (std::size_t t = 0; t < records.size(); ++t)
                vals[t] = n == 0 ? 0.0 : records[t].heating_series[n - 1];
            const double mean = pairwise_sum(vals) / vals.size();
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            var = records.size() > 1 ? var / (vals.size() - 1) : 0.0;
            Fig4Row row;
            row.n_sites = n_sites;
            row.n = n;
            row.drift_mean = mean;
            row.drift_stderr = std::sqrt(var / vals.size());
            result.rows.push_back(row);
        }
        for (auto& r : records) result.records.push_back(std::move(r));
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

Fig2Result run_fig2_experiment(const ExperimentConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Fig2Result result;
    const long trials = config.n_trajectories;
    const int n_max = config.n_measurements;
    for (std::size_t p = 0; p < config.energy_pairs.size(); ++p) {
        const auto [e1, e2] = config.energy_pairs[p];
        const CutModelParams params = CutModelParams::from_peaks(e1, e2, -1.0, 1.0, 0.0);
        std::vector<int> ns;
        std::vector<double> means;
        for (int n = 1; n <= n_max; ++n) {
            rng::Engine gen = rng::engine_for(config.master_seed, p * 10000 + n);
            const McResult mc = mc_avg_delta_g_two_peak(params, n, trials, gen);
            Fig2Row row;
            row.pair_id = static_cast<int>(p);
            row.n = n;
            row.mean = mc.mean;
            row.std_error = mc.std_error;
            result.rows.push_back(row);
            ns.push_back(n);
            means.push_back(mc.mean);
        }
        Fig2Fit fit;
        fit.pair_id = static_cast<int>(p);
        fit.e1 = e1;
        fit.e2 = e2;
        fit.lambda = fit_lambda(ns, means);
        fit.kappa = e1 == e2 ? 0.0
                             : fit.lambda * params.span() * params.span() / ((e1 - e2) * (e1 - e2));
        result.fits.push_back(fit);
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<std::string> emit_fig2_outputs(const Fig2Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir) {
    if (result.rows.empty()) throw std::invalid_argument("emit_fig2_outputs: empty result");
    const auto t0 = std::chrono::steady_clock::now();
    const double base_seconds = result.wall_seconds;
    const auto dir = prepare_dir(config, out_dir);

    std::vector<std::string> files;
    {
        std::ofstream out(dir / "fig2_delta_g.csv");
        if (!out) throw std::runtime_error("cannot write " + (dir / "fig2_delta_g.csv").string());
        out << "pair_id,n,mean,std_error\n";
        for (const auto& r : result.rows)
            out << r.pair_id << "," << r.n << "," << fmt17(r.mean) << "," << fmt17(r.std_error)
                << "\n";
        files.push_back("fig2_delta_g.csv");
    }
    {
        std::ofstream out(dir / "fig2_fits.csv");
        out << "pair_id,e1,e2,lambda,kappa\n";
        for (const auto& f : result.fits)
            out << f.pair_id << "," << fmt17(f.e1) << "," << fmt17(f.e2) << "," << fmt17(f.lambda)
                << "," << fmt17(f.kappa) << "\n";
        files.push_back("fig2_fits.csv");
    }
    const double secs =
        base_seconds +
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(dir, config, files, secs);
    return files;
}

std::vector<std::string> emit_fig3_outputs(const Fig3Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir) {
    if (result.records.empty()) throw std::invalid_argument("emit_fig3_outputs: empty result");
    const auto t0 = std::chrono::steady_clock::now();
    const double base_seconds = result.wall_seconds;
    const auto dir = prepare_dir(config, out_dir);

    std::vector<std::string> files;
    std::ofstream out(dir / "fig3_distributions.csv");
    if (!out) throw std::runtime_error("cannot write " + (dir / "fig3_distributions.csv").string());
    out << "trajectory,snapshot,bin_center,density\n";
    for (std::size_t t = 0; t < result.records.size(); ++t) {
        const TrajectoryRecord& rec = result.records[t];
        auto dump = [&](int snapshot, const EnergyDistribution& g) {
            for (int b = 0; b < g.grid.n_bins; ++b)
                out << t << "," << snapshot << "," << fmt17(g.grid.center(b)) << ","
                    << fmt17(g.density[b]) << "\n";
        };
        dump(0, rec.initial);
        for (std::size_t s = 0; s < rec.distributions.size(); ++s)
            dump(rec.snapshot_at[s], rec.distributions[s]);
    }
    files.push_back("fig3_distributions.csv");
    const double secs =
        base_seconds +
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(dir, config, files, secs);
    return files;
}

std::vector<std::string> emit_fig4_outputs(const Fig4Result& result,
                                           const ExperimentConfig& config,
                                           const std::string& out_dir) {
    if (result.rows.empty()) throw std::invalid_argument("emit_fig4_outputs: empty result");
    const auto t0 = std::chrono::steady_clock::now();
    const double base_seconds = result.wall_seconds;
    const auto dir = prepare_dir(config, out_dir);

    std::vector<std::string> files;
    std::ofstream out(dir / "fig4_heating.csv");
    if (!out) throw std::runtime_error("cannot write " + (dir / "fig4_heating.csv").string());
    out << "N,n,drift_mean,drift_stderr\n";
    for (const auto& r : result.rows)
        out << r.n_sites << "," << r.n << "," << fmt17(r.drift_mean) << ","
            << fmt17(r.drift_stderr) << "\n";
    files.push_back("fig4_heating.csv");
    const double secs =
        base_seconds +
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(dir, config, files, secs);
    return files;
}

}  // namespace stab
