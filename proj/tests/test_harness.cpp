// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stab/harness.hpp"

using namespace stab;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small_fig3() {
    ExperimentConfig c = ExperimentConfig::defaults("fig3-wavefunction");
    c.hamiltonian.n_sites = 8;
    c.n_trajectories = 4;
    c.n_measurements = 10;
    c.bin_count = 32;
    c.master_seed = 99;
    return c;
}

}  // namespace

TEST_CASE("config round-trips through the flat text format") {
    ExperimentConfig c = ExperimentConfig::defaults("fig3-wavefunction");
    c.master_seed = 424242;
    c.temperatures = {0.1, -0.1};
    c.size_list = {6, 8};
    const std::string text = config_to_text(c);
    const ExperimentConfig back = parse_config_text(text, ExperimentConfig::defaults("custom"));
    CHECK(back.experiment == c.experiment);
    CHECK(back.master_seed == c.master_seed);
    CHECK(back.hamiltonian.n_sites == c.hamiltonian.n_sites);
    CHECK(back.hamiltonian.j_y == c.hamiltonian.j_y);
    CHECK(back.temperatures == c.temperatures);
    CHECK(back.size_list == c.size_list);
    CHECK(config_to_text(back) == text);
}

TEST_CASE("config rejects unknown keys and bad values") {
    CHECK_THROWS_AS(parse_config_text("nonsense = 1\n", ExperimentConfig::defaults("custom")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("mode = sideways\n", ExperimentConfig::defaults("custom")),
                    std::invalid_argument);
    const ExperimentConfig c = parse_config_text("# comment\n\nn_sites = 9 # trailing\n",
                                                 ExperimentConfig::defaults("custom"));
    CHECK(c.hamiltonian.n_sites == 9);
}

TEST_CASE("trajectory seeds form distinct substreams") {
    CHECK(trajectory_seed(1, 0) != trajectory_seed(1, 1));
    CHECK(trajectory_seed(1, 0) != trajectory_seed(2, 0));
    CHECK(trajectory_seed(7, 3) == trajectory_seed(7, 3));
}

TEST_CASE("pairwise_sum equals plain summation") {
    std::vector<double> v;
    for (int i = 0; i < 1000; ++i) v.push_back(std::sin(i * 0.37));
    double plain = 0.0;
    for (double x : v) plain += x;
    CHECK(pairwise_sum(v) == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("fig3 snapshots and determinism") {
    const ExperimentConfig c = small_fig3();
    const Fig3Result r = run_fig3_experiment(c);
    REQUIRE(r.records.size() == 4);

    SUBCASE("ten pair measurements give five snapshots, after the even events") {
        for (const auto& rec : r.records) {
            CHECK(rec.distributions.size() == 5);
            CHECK(rec.snapshot_at == std::vector<int>{2, 4, 6, 8, 10});
            CHECK(rec.events.size() == 10);
            CHECK(rec.delta_g_series.size() == 5);
        }
    }
    SUBCASE("every emitted distribution is normalized") {
        for (const auto& rec : r.records) {
            CHECK(rec.initial.integral() == doctest::Approx(1.0).epsilon(1e-6));
            for (const auto& g : rec.distributions)
                CHECK(g.integral() == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
    SUBCASE("pair schedule alternates onto nearest neighbours") {
        for (const auto& rec : r.records)
            for (std::size_t e = 1; e < rec.events.size(); e += 2) {
                const int d = std::abs(rec.events[e].site - rec.events[e - 1].site);
                CHECK((d == 1 || d == 7));
            }
    }
    SUBCASE("zero measurements give a zero delta-g series") {
        ExperimentConfig c0 = small_fig3();
        c0.n_measurements = 0;
        c0.n_trajectories = 2;
        const Fig3Result r0 = run_fig3_experiment(c0);
        for (const auto& rec : r0.records) {
            CHECK(rec.distributions.empty());
            CHECK(delta_g(rec.initial, rec.initial) == 0.0);
        }
    }
    SUBCASE("identical seeds give byte-identical CSV outputs") {
        const auto dir1 = std::filesystem::temp_directory_path() / "stab_fig3_a";
        const auto dir2 = std::filesystem::temp_directory_path() / "stab_fig3_b";
        std::filesystem::remove_all(dir1);
        std::filesystem::remove_all(dir2);
        emit_fig3_outputs(r, c, dir1.string());
        emit_fig3_outputs(run_fig3_experiment(c), c, dir2.string());
        CHECK(slurp(dir1 / "fig3_distributions.csv") == slurp(dir2 / "fig3_distributions.csv"));
        CHECK(!slurp(dir1 / "manifest.txt").empty());
    }
}

TEST_CASE("fig3 refuses oversized exact runs with guidance") {
    ExperimentConfig c = small_fig3();
    c.hamiltonian.n_sites = 16;
    c.estimator = "exact";
    CHECK_THROWS_WITH_AS(run_fig3_experiment(c), doctest::Contains("--spectral"),
                         std::invalid_argument);
}

TEST_CASE("fig4 heating table") {
    ExperimentConfig c = ExperimentConfig::defaults("fig4-heating");
    c.size_list = {6, 8};
    c.n_trajectories = 30;
    c.n_measurements = 6;
    c.master_seed = 7;
    const Fig4Result r = run_fig4_experiment(c);
    REQUIRE(r.rows.size() == 2 * 7);

    SUBCASE("n = 0 rows have exactly zero drift") {
        for (const auto& row : r.rows)
            if (row.n == 0) {
                CHECK(row.drift_mean == 0.0);
                CHECK(row.drift_stderr == 0.0);
            }
    }
    SUBCASE("drift grows positive within a few measurements") {
        for (const auto& row : r.rows)
            if (row.n >= 3) CHECK(row.drift_mean > 0.0);
    }
    SUBCASE("negative temperature flips the drift sign") {
        ExperimentConfig cn = c;
        cn.temperatures = {-0.1};
        cn.size_list = {6};
        cn.n_trajectories = 20;
        const Fig4Result rn = run_fig4_experiment(cn);
        for (const auto& row : rn.rows)
            if (row.n >= 3) CHECK(row.drift_mean < 0.0);
    }
    SUBCASE("csv emission carries the N,n,drift schema") {
        const auto dir = std::filesystem::temp_directory_path() / "stab_fig4";
        std::filesystem::remove_all(dir);
        emit_fig4_outputs(r, c, dir.string());
        std::istringstream in(slurp(dir / "fig4_heating.csv"));
        std::string header;
        std::getline(in, header);
        CHECK(header == "N,n,drift_mean,drift_stderr");
        int rows = 0;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ++rows;
        CHECK(rows == static_cast<int>(r.rows.size()));
    }
}

TEST_CASE("fig2 analytic experiment") {
    ExperimentConfig c = ExperimentConfig::defaults("fig2-analytic");
    c.n_trajectories = 20000;
    c.n_measurements = 12;
    c.master_seed = 5;
    const Fig2Result r = run_fig2_experiment(c);
    REQUIRE(r.fits.size() == 3);
    REQUIRE(r.rows.size() == 3 * 12);

    SUBCASE("all reference pairs clear 0.1 by n = 9") {
        for (const auto& row : r.rows)
            if (row.n == 9) CHECK(row.mean > 0.1);
    }
    SUBCASE("coincident peaks give all zeros") {
        ExperimentConfig cz = c;
        cz.energy_pairs = {{0.4, 0.4}};
        const Fig2Result rz = run_fig2_experiment(cz);
        for (const auto& row : rz.rows) CHECK(row.mean == 0.0);
        CHECK(rz.fits[0].kappa == 0.0);
    }
    SUBCASE("emission produces the pinned schema plus fits") {
        const auto dir = std::filesystem::temp_directory_path() / "stab_fig2";
        std::filesystem::remove_all(dir);
        const auto files = emit_fig2_outputs(r, c, dir.string());
        CHECK(files.size() == 2);
        std::istringstream in(slurp(dir / "fig2_delta_g.csv"));
        std::string header;
        std::getline(in, header);
        CHECK(header == "pair_id,n,mean,std_error");
        const std::string manifest = slurp(dir / "manifest.txt");
        CHECK(manifest.find("master_seed = 5") != std::string::npos);
    }
    SUBCASE("empty results refuse to emit") {
        CHECK_THROWS_AS(emit_fig2_outputs(Fig2Result{}, c, "/tmp/stab_unused"),
                        std::invalid_argument);
    }
}
