// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stab/measurement.hpp"
#include "test_support.hpp"

using namespace stab;

TEST_CASE("projector basics on a single spin") {
    const SpinState up = SpinState::basis(1, 0);
    SUBCASE("aligned outcome keeps the state with probability 1") {
        const auto [state, p] = apply_projector(up, 0, 0.0, 0.0);
        CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(state.amp[0] - cplx{1, 0}) < 1e-12);
    }
    SUBCASE("antipodal outcome is an orthogonal-outcome error") {
        CHECK_THROWS_AS(apply_projector(up, 0, std::numbers::pi, 0.0), OrthogonalOutcomeError);
    }
    SUBCASE("equatorial outcome has probability 1/2 and gives |+x>") {
        const auto [state, p] = apply_projector(up, 0, std::numbers::pi / 2.0, 0.0);
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(state.amp[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(state.amp[1] - 1.0 / std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("projector matches the dense oracle on a random chain") {
    const SpinState psi = test::random_state(5, 31);
    const double theta = 1.234, phi = 2.5;
    const auto [state, p] = apply_projector(psi, 2, theta, phi);
    const CMatrix pd = test::dense_projector(5, 2, theta, phi);
    const cvec dense = matvec(pd, psi.amp);
    double dn = 0.0;
    for (const cplx& a : dense) dn += std::norm(a);
    CHECK(p == doctest::Approx(dn).epsilon(1e-12));
    for (std::size_t i = 0; i < dense.size(); ++i)
        CHECK(std::abs(state.amp[i] - dense[i] / std::sqrt(dn)) < 1e-12);
}

TEST_CASE("idempotence: repeating the same projection is a no-op with probability 1") {
    const SpinState psi = test::random_state(6, 33);
    const auto first = apply_projector(psi, 3, 0.9, 4.0);
    const auto second = apply_projector(first.state, 3, 0.9, 4.0);
    CHECK(second.probability == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < psi.dim(); ++i)
        CHECK(std::abs(second.state.amp[i] - first.state.amp[i]) < 1e-12);
}

TEST_CASE("completeness: axis and antipode probabilities sum to 1") {
    for (unsigned seed = 40; seed < 44; ++seed) {
        const SpinState psi = test::random_state(8, seed);
        const double theta = 0.3 + 0.11 * seed, phi = 0.2 * seed;
        const auto plus = apply_projector(psi, 5, theta, phi);
        const auto minus = apply_projector(psi, 5, std::numbers::pi - theta,
                                           std::fmod(phi + std::numbers::pi, 2 * std::numbers::pi));
        CHECK(plus.probability + minus.probability == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("locality: measuring a product factor leaves the rest untouched") {
    // psi = chi(sites 0,1) x eta(sites 2,3)
    const SpinState chi = test::random_state(2, 51);
    const SpinState eta = test::random_state(2, 52);
    SpinState psi = SpinState::zero(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) psi.amp[a | (b << 2)] = chi.amp[a] * eta.amp[b];

    const CMatrix before = test::reduced_density(psi, {2, 3});
    const auto [after_state, p] = apply_projector(psi, 0, 1.1, 0.7);
    const CMatrix after = test::reduced_density(after_state, {2, 3});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(after.at(i, j) - before.at(i, j)) < 1e-12);
}

TEST_CASE("measure_spin") {
    SUBCASE("z-aligned state always yields the up outcome") {
        const SpinState up = SpinState::basis(1, 0);
        rng::Engine gen(7);
        for (int i = 0; i < 20; ++i) {
            const auto [state, ev] = measure_spin(up, 0, 0.0, 0.0, gen);
            CHECK(ev.theta == doctest::Approx(0.0));
            CHECK(ev.born_probability == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("|+x> measured along z is an unbiased coin") {
        SpinState px = SpinState::zero(1);
        px.amp[0] = px.amp[1] = 1.0 / std::sqrt(2.0);
        rng::Engine gen(11);
        int ups = 0;
        const int trials = 10000;
        for (int i = 0; i < trials; ++i) {
            const auto [state, ev] = measure_spin(px, 0, 0.0, 0.0, gen);
            if (ev.theta < 1e-9) ++ups;
        }
        CHECK(std::abs(ups / static_cast<double>(trials) - 0.5) < 0.02);
    }
    SUBCASE("output is normalized and the realized outcome is reproducible") {
        const SpinState psi = test::random_state(7, 61);
        rng::Engine gen(13);
        const auto [state, ev] = measure_spin(psi, 4, 0.8, 1.9, gen);
        CHECK(std::abs(state.norm() - 1.0) < 1e-10);
        CHECK(ev.born_probability > 0.0);
        CHECK(ev.born_probability <= 1.0);
        const auto again = apply_projector(state, 4, ev.theta, ev.phi);
        CHECK(again.probability == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("sample_axis") {
    SUBCASE("deterministic for a fixed seed") {
        rng::Engine a(3), b(3);
        const auto [t1, p1] = sample_axis(a);
        const auto [t2, p2] = sample_axis(b);
        CHECK(t1 == t2);
        CHECK(p1 == p2);
    }
    SUBCASE("cos(theta) is uniform on [-1,1]") {
        rng::Engine gen(17);
        const int n = 100000;
        std::vector<double> cs(n);
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            const auto [theta, phi] = sample_axis(gen);
            cs[i] = std::cos(theta);
            mean += cs[i];
        }
        mean /= n;
        CHECK(std::abs(mean) < 0.01);
        // Kolmogorov-Smirnov distance against U[-1,1]
        std::sort(cs.begin(), cs.end());
        double ks = 0.0;
        for (int i = 0; i < n; ++i) {
            const double cdf = (cs[i] + 1.0) / 2.0;
            ks = std::max(ks, std::abs(cdf - (i + 1.0) / n));
            ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
        }
        CHECK(ks < 0.01);
    }
}

TEST_CASE("schedules") {
    SUBCASE("pair mode on a periodic 24-site chain: every even event is adjacent") {
        rng::Engine gen(23);
        const Schedule s = build_schedule(ScheduleMode::Pair, 200, 24, 0.0, 2.0, true, gen);
        REQUIRE(s.sites.size() == 200);
        for (int e = 1; e < 200; e += 2) {
            const int d = std::abs(s.sites[e] - s.sites[e - 1]);
            const bool adjacent = d == 1 || d == 23;
            CHECK(adjacent);
        }
        CHECK(s.mean_rate == doctest::Approx(1.0 / 48.0));
    }
    SUBCASE("open-chain pair mode stays inside the lattice") {
        rng::Engine gen(29);
        const Schedule s = build_schedule(ScheduleMode::Pair, 400, 4, 0.0, 1.0, false, gen);
        for (int e = 1; e < 400; e += 2) {
            CHECK(s.sites[e] >= 0);
            CHECK(s.sites[e] < 4);
            CHECK(std::abs(s.sites[e] - s.sites[e - 1]) == 1);
        }
    }
    SUBCASE("delays have the right mean") {
        rng::Engine gen(31);
        const Schedule s = build_schedule(ScheduleMode::Single, 10000, 8, 0.0, 2.0, false, gen);
        double mean = 0.0;
        for (double d : s.delays) mean += d;
        mean /= s.delays.size();
        CHECK(std::abs(mean - 1.0) < 0.05);
    }
    SUBCASE("zero events gives an empty schedule") {
        rng::Engine gen(37);
        const Schedule s = build_schedule(ScheduleMode::Single, 0, 8, 0.0, 2.0, false, gen);
        CHECK(s.sites.empty());
        CHECK(s.delays.empty());
    }
    SUBCASE("invalid delay interval is rejected") {
        rng::Engine gen(41);
        CHECK_THROWS_AS(build_schedule(ScheduleMode::Single, 1, 8, 2.0, 0.0, false, gen),
                        std::invalid_argument);
    }
    SUBCASE("pair mode needs at least two sites") {
        rng::Engine gen(43);
        CHECK_THROWS_AS(build_schedule(ScheduleMode::Pair, 2, 1, 0.0, 1.0, false, gen),
                        std::invalid_argument);
    }
}
