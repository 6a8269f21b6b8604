// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stab/hamiltonian.hpp"
#include "test_support.hpp"

using namespace stab;

namespace {
const HamiltonianSpec kReferenceBond = HamiltonianSpec::xyz(2, 0.47, -0.37, -0.79, false);
}

TEST_CASE("field single spin: |up> is an eigenstate at -h_z/2") {
    const auto spec = HamiltonianSpec::field(1, 1.0);
    const SpinState up = SpinState::basis(1, 0);
    const SpinState h_up = apply_hamiltonian(spec, up);
    CHECK(std::abs(h_up.amp[0] - cplx{-0.5, 0.0}) < 1e-14);
    CHECK(std::abs(h_up.amp[1]) < 1e-14);
}

TEST_CASE("reference bond: (|uu> + |dd>)/sqrt(2) is an eigenstate at -0.0125") {
    SpinState bell = SpinState::zero(2);
    bell.amp[0b00] = 1.0 / std::sqrt(2.0);
    bell.amp[0b11] = 1.0 / std::sqrt(2.0);
    const SpinState h_bell = apply_hamiltonian(kReferenceBond, bell);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(h_bell.amp[i] - (-0.0125) * bell.amp[i]) < 1e-14);
}

TEST_CASE("zero state maps to zero state") {
    const SpinState z = SpinState::zero(3);
    for (auto kind : {HamiltonianSpec::field(3, 0.7), HamiltonianSpec::xyz(3, 1, 2, 3, true)}) {
        const SpinState hz = apply_hamiltonian(kind, z);
        for (const cplx& a : hz.amp) CHECK(std::abs(a) == 0.0);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const auto spec = HamiltonianSpec::field(3, 1.0);
    CHECK_THROWS_AS(apply_hamiltonian(spec, SpinState::zero(2)), std::invalid_argument);
}

TEST_CASE("matrix-free application equals the dense oracle") {
    for (unsigned seed = 0; seed < 4; ++seed) {
        const auto spec = seed % 2 == 0 ? HamiltonianSpec::xyz(8, 0.47, -0.37, -0.79, true)
                                        : HamiltonianSpec::xyz(7, -1.1, 0.3, 0.9, false);
        const SpinState psi = test::random_state(spec.n_sites, 100 + seed);
        const SpinState fast = apply_hamiltonian(spec, psi);
        const cvec dense = matvec(test::dense_hamiltonian(spec), psi.amp);
        for (std::size_t i = 0; i < fast.dim(); ++i)
            CHECK(std::abs(fast.amp[i] - dense[i]) < 1e-12);
    }
}

TEST_CASE("hermiticity: <chi|H psi> = conj(<psi|H chi>)") {
    const auto spec = HamiltonianSpec::xyz(10, 0.47, -0.37, -0.79, true);
    const SpinState psi = test::random_state(10, 1);
    const SpinState chi = test::random_state(10, 2);
    const cplx a = inner(chi, apply_hamiltonian(spec, psi));
    const cplx b = inner(psi, apply_hamiltonian(spec, chi));
    CHECK(std::abs(a - std::conj(b)) < 1e-10);
}

TEST_CASE("energy expectation") {
    SUBCASE("eigenstate gives its eigenvalue") {
        const auto spec = HamiltonianSpec::field(4, 0.8);
        const SpinState basis = SpinState::basis(4, 0b0101);
        CHECK(energy_expectation(spec, basis) == doctest::Approx(0.0).epsilon(1e-12));
        const SpinState down = SpinState::basis(4, 0b1111);
        CHECK(energy_expectation(spec, down) == doctest::Approx(0.8 * 2.0));
    }
    SUBCASE("equal superposition of two eigenstates averages them") {
        const auto spec = HamiltonianSpec::field(3, 1.0);
        SpinState s = SpinState::zero(3);
        s.amp[0b000] = 1.0 / std::sqrt(2.0);  // E = -1.5
        s.amp[0b111] = 1.0 / std::sqrt(2.0);  // E = +1.5
        CHECK(energy_expectation(spec, s) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("random state matches the dense quadratic form") {
        const auto spec = HamiltonianSpec::xyz(6, 0.47, -0.37, -0.79, true);
        const SpinState psi = test::random_state(6, 5);
        const cvec hp = matvec(test::dense_hamiltonian(spec), psi.amp);
        cplx e{0, 0};
        for (std::size_t i = 0; i < hp.size(); ++i) e += std::conj(psi.amp[i]) * hp[i];
        CHECK(energy_expectation(spec, psi) == doctest::Approx(e.real()).epsilon(1e-10));
    }
    SUBCASE("non-normalized input is rejected") {
        const auto spec = HamiltonianSpec::field(2, 1.0);
        SpinState s = SpinState::basis(2, 0);
        s.amp[0] *= 1.01;
        CHECK_THROWS_AS(energy_expectation(spec, s), std::invalid_argument);
    }
}

TEST_CASE("field spectrum: ladder with binomial degeneracies") {
    const auto s = exact_spectrum(HamiltonianSpec::field(4, 1.0), false);
    REQUIRE(s.eigenvalues.size() == 16);
    const double expected[] = {-2, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2};
    for (int i = 0; i < 16; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]));
    CHECK(s.e_min == doctest::Approx(-2.0));
    CHECK(s.e_max == doctest::Approx(2.0));
}

TEST_CASE("reference-coupling bond spectrum: Bell-basis closed form") {
    const auto s = exact_spectrum(kReferenceBond, true);
    const double expected[] = {-0.2225, -0.1725, -0.0125, 0.4075};
    for (int i = 0; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("XYZ eigenvalue sum vanishes (traceless terms)") {
    const auto s = exact_spectrum(HamiltonianSpec::xyz(6, 1.3, -0.2, 0.8, true), false);
    double sum = 0.0;
    for (double e : s.eigenvalues) sum += e;
    CHECK(std::abs(sum) < 1e-9);
}

TEST_CASE("eigenvectors are orthonormal and diagonalize H") {
    const auto spec = HamiltonianSpec::xyz(5, 0.47, -0.37, -0.79, true);
    const auto s = exact_spectrum(spec, true);
    const CMatrix gram = matmul_adj(s.eigenvectors, s.eigenvectors);
    for (std::size_t i = 0; i < gram.rows; ++i)
        for (std::size_t j = 0; j < gram.cols; ++j)
            CHECK(std::abs(gram.at(i, j) - (i == j ? cplx{1, 0} : cplx{0, 0})) < 1e-8);
    // H v_k = E_k v_k through the matrix-free route
    HamiltonianOperator op(spec);
    for (std::size_t k = 0; k < s.eigenvalues.size(); k += 7) {
        cvec vk(s.eigenvectors.col(k), s.eigenvectors.col(k) + s.eigenvectors.rows), hv;
        op.apply(vk, hv);
        for (std::size_t i = 0; i < hv.size(); ++i)
            CHECK(std::abs(hv[i] - s.eigenvalues[k] * vk[i]) < 1e-9);
    }
}

TEST_CASE("field degeneracy counts sum to 2^N") {
    const auto s = exact_spectrum(HamiltonianSpec::field(10, 0.7), false);
    CHECK(s.eigenvalues.size() == 1024);
    // levels come out sorted; count each and compare against binomials
    int count = 1;
    std::size_t total = 0;
    for (std::size_t i = 1; i <= s.eigenvalues.size(); ++i) {
        if (i < s.eigenvalues.size() && s.eigenvalues[i] == s.eigenvalues[i - 1]) {
            ++count;
            continue;
        }
        total += count;
        count = 1;
    }
    CHECK(total == 1024);
}

TEST_CASE("size over cap raises the exact-path error") {
    CHECK_THROWS_WITH_AS(exact_spectrum(HamiltonianSpec::xyz(15, 1, 1, 1, true), false),
                         doctest::Contains("too large for exact path"), std::invalid_argument);
    CHECK_THROWS_AS(exact_spectrum(HamiltonianSpec::field(14, 1.0), true), std::invalid_argument);
}

TEST_CASE("canonical width closed forms for the field ladder") {
    SUBCASE("single spin at infinite temperature: 1/2") {
        const auto s = exact_spectrum(HamiltonianSpec::field(1, 1.0), false);
        CHECK(canonical_width(s, 1e9) == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("N spins at infinite temperature: h_z sqrt(N)/2") {
        const auto s = exact_spectrum(HamiltonianSpec::field(9, 1.0), false);
        CHECK(canonical_width(s, 1e9) == doctest::Approx(1.5).epsilon(1e-6));
    }
    SUBCASE("relative width shrinks like 1/sqrt(N)") {
        auto ratio = [](int n) {
            const auto s = exact_spectrum(HamiltonianSpec::field(n, 1.0), false);
            const double w = canonical_width(s, 1.0);
            const double e = canonical_energy(s, 1.0);
            return w / (e - s.e_min);
        };
        const double r16 = ratio(16);
        CHECK(r16 < 0.5);
        CHECK(ratio(8) / r16 == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
    }
    SUBCASE("T = 0 is rejected") {
        const auto s = exact_spectrum(HamiltonianSpec::field(2, 1.0), false);
        CHECK_THROWS_AS(canonical_width(s, 0.0), std::invalid_argument);
    }
}

TEST_CASE("canonical width matches finite-difference T sqrt(dE/dT)") {
    const auto s = exact_spectrum(HamiltonianSpec::xyz(10, 0.47, -0.37, -0.79, true), false);
    for (double t : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const double h = 1e-4 * t;
        const double dedt = (canonical_energy(s, t + h) - canonical_energy(s, t - h)) / (2 * h);
        const double fd = t * std::sqrt(dedt);
        CHECK(canonical_width(s, t) == doctest::Approx(fd).epsilon(0.01));
    }
}
