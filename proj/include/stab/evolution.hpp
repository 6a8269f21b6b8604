// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "stab/hamiltonian.hpp"
#include "stab/state.hpp"

namespace stab {

/// One fourth-order Runge-Kutta step of the Schroedinger equation:
/// psi + nu1 + nu2 + nu3 + nu4 with nu1 = -i H psi dt, nu_k = -(i/k) H nu_{k-1} dt.
/// Equivalent to the fourth-order Taylor expansion of exp(-i H dt).
/// Guidance: dt * (spectral radius of H) should stay well below 1
/// (dt <= 0.05 for couplings of order 1).
SpinState rk4_step(const HamiltonianSpec& spec, const SpinState& psi, double dt);

/// Taylor-4 step with a caller-chosen prefactor z (z = -i dt real time,
/// z = -d_tau imaginary time). In-place, scratch supplied by the caller.
void taylor4_step_inplace(const HamiltonianOperator& op, cvec& psi, cplx z,
                          cvec& k1, cvec& k2);

/// Repeated rk4 steps; the final partial step lands exactly on t_total.
/// Renormalizes once at the end; the pre-normalization drift |norm - 1|
/// is written to *norm_drift when given.
SpinState evolve(const HamiltonianSpec& spec, const SpinState& psi, double t_total,
                 double dt, double* norm_drift = nullptr);

/// Gaussian random state: every amplitude i.i.d. complex normal, then
/// normalized. Deterministic for a fixed seed.
SpinState random_infinite_temperature_state(int n_sites, std::uint64_t seed);

/// Applies exp(-H/(2T)) by imaginary-time RK4 with per-step renormalization,
/// so eigenstate probabilities end up proportional to exp(-E/T). Negative T
/// weights toward the top of the spectrum. T = 0 is rejected.
SpinState imaginary_time_prep(const HamiltonianSpec& spec, const SpinState& psi, double T);

/// Normalized psi_a + psi_b. Throws if the sum is (near-)zero.
SpinState two_peak_superposition(const SpinState& psi_a, const SpinState& psi_b);

}  // namespace stab
