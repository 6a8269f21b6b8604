// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/evolution.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace stab {

void taylor4_step_inplace(const HamiltonianOperator& op, cvec& psi, cplx z, cvec& k1, cvec& k2) {
    // nu_1 = z H psi, nu_k = (z/k) H nu_{k-1}; psi += nu_1 + ... + nu_4
    op.apply(psi, k1);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        k1[i] *= z;
        psi[i] += k1[i];
    }
    for (int k = 2; k <= 4; ++k) {
        op.apply(k1, k2);
        const cplx f = z / static_cast<double>(k);
        for (std::size_t i = 0; i < psi.size(); ++i) {
            k1[i] = f * k2[i];
            psi[i] += k1[i];
        }
    }
}

SpinState rk4_step(const HamiltonianSpec& spec, const SpinState& psi, double dt) {
    if (psi.dim() != spec.dim()) throw std::invalid_argument("rk4_step: dimension mismatch");
    HamiltonianOperator op(spec);
    SpinState out = psi;
    cvec k1(psi.dim()), k2(psi.dim());
    taylor4_step_inplace(op, out.amp, cplx{0.0, -dt}, k1, k2);
    return out;
}

SpinState evolve(const HamiltonianSpec& spec, const SpinState& psi, double t_total, double dt,
                 double* norm_drift) {
    if (psi.dim() != spec.dim()) throw std::invalid_argument("evolve: dimension mismatch");
    if (t_total < 0.0) throw std::invalid_argument("evolve: t_total must be >= 0");
    if (dt <= 0.0) throw std::invalid_argument("evolve: dt must be > 0");

    HamiltonianOperator op(spec);
    SpinState out = psi;
    cvec k1(psi.dim()), k2(psi.dim());
    const long n_full = static_cast<long>(t_total / dt);
    for (long s = 0; s < n_full; ++s) taylor4_step_inplace(op, out.amp, cplx{0.0, -dt}, k1, k2);
    const double rest = t_total - n_full * dt;
    if (rest > 1e-12) taylor4_step_inplace(op, out.amp, cplx{0.0, -rest}, k1, k2);

    const double n = out.norm();
    if (norm_drift) *norm_drift = std::abs(n - 1.0);
    out.normalize();
    return out;
}

SpinState random_infinite_temperature_state(int n_sites, std::uint64_t seed) {
    rng::Engine gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    SpinState s = SpinState::zero(n_sites);
    for (cplx& a : s.amp) {
        const double re = normal(gen);
        const double im = normal(gen);
        a = cplx{re, im};
    }
    s.normalize();
    return s;
}

SpinState imaginary_time_prep(const HamiltonianSpec& spec, const SpinState& psi, double T) {
    if (T == 0.0) throw std::invalid_argument("imaginary_time_prep: T = 0");
    if (psi.dim() != spec.dim())
        throw std::invalid_argument("imaginary_time_prep: dimension mismatch");

    // exp(-H/(2T)): tau runs to beta/2 so probabilities scale as exp(-E/T)
    const double tau_total = 1.0 / (2.0 * T);  // signed; negative T runs backwards
    const double hnorm = std::max(spec.norm_bound(), 1e-12);
    const double step = 0.025 / hnorm;  // beta-step 0.05/|H| split over tau = beta/2
    const long n_steps = std::max(1L, static_cast<long>(std::ceil(std::abs(tau_total) / step)));
    const double dtau = tau_total / static_cast<double>(n_steps);

    HamiltonianOperator op(spec);
    SpinState out = psi;
    cvec k1(psi.dim()), k2(psi.dim());
    for (long s = 0; s < n_steps; ++s) {
        taylor4_step_inplace(op, out.amp, cplx{-dtau, 0.0}, k1, k2);
        const double n = out.norm();
        if (n < 1e-300)
            throw std::runtime_error("imaginary_time_prep: state underflowed to zero");
        for (cplx& a : out.amp) a /= n;
    }
    return out;
}

SpinState two_peak_superposition(const SpinState& psi_a, const SpinState& psi_b) {
    if (psi_a.dim() != psi_b.dim())
        throw std::invalid_argument("two_peak_superposition: dimension mismatch");
    SpinState out = psi_a;
    for (std::size_t i = 0; i < out.amp.size(); ++i) out.amp[i] += psi_b.amp[i];
    if (out.norm() < 1e-12)
        throw std::runtime_error("two_peak_superposition: states cancel (psi_a = -psi_b)");
    out.normalize();
    return out;
}

}  // namespace stab
