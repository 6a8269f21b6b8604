// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Spinor {
    cplx up, dn;
};

// |theta,phi> = cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>
Spinor axis_spinor(double theta, double phi) {
    return {cplx{std::cos(theta / 2.0), 0.0},
            std::polar(std::sin(theta / 2.0), phi)};
}

// Born weight of the projector onto (theta, phi) at `site`.
double born_weight(const SpinState& psi, int site, const Spinor& v) {
    const std::size_t mask = std::size_t{1} << site;
    double p = 0.0;
    for (std::size_t x = 0; x < psi.dim(); ++x) {
        if (x & mask) continue;
        const cplx c = std::conj(v.up) * psi.amp[x] + std::conj(v.dn) * psi.amp[x | mask];
        p += std::norm(c);
    }
    return p;
}

void project_unnormalized(const SpinState& in, int site, const Spinor& v, SpinState& out) {
    const std::size_t mask = std::size_t{1} << site;
    out = SpinState::zero(in.n_sites);
    for (std::size_t x = 0; x < in.dim(); ++x) {
        if (x & mask) continue;
        const cplx c = std::conj(v.up) * in.amp[x] + std::conj(v.dn) * in.amp[x | mask];
        out.amp[x] = v.up * c;
        out.amp[x | mask] = v.dn * c;
    }
}

}  // namespace

ProjectionResult apply_projector(const SpinState& psi, int site, double theta, double phi) {
    if (site < 0 || site >= psi.n_sites)
        throw std::invalid_argument("apply_projector: site out of range");
    const Spinor v = axis_spinor(theta, phi);
    SpinState out;
    project_unnormalized(psi, site, v, out);
    double p = 0.0;
    for (const cplx& a : out.amp) p += std::norm(a);
    if (p < 1e-14)
        throw OrthogonalOutcomeError("apply_projector: orthogonal outcome (probability ~ 0)");
    const double inv = 1.0 / std::sqrt(p);
    for (cplx& a : out.amp) a *= inv;
    return {std::move(out), p};
}

std::pair<SpinState, MeasurementEvent> measure_spin(const SpinState& psi, int site,
                                                    double axis_theta, double axis_phi,
                                                    rng::Engine& gen, double time) {
    if (site < 0 || site >= psi.n_sites)
        throw std::invalid_argument("measure_spin: site out of range");
    if (!psi.is_normalized(1e-6))
        throw std::invalid_argument("measure_spin: state is not normalized");

    const double p_plus = born_weight(psi, site, axis_spinor(axis_theta, axis_phi));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double theta = axis_theta, phi = axis_phi, p = p_plus;
    if (unif(gen) >= p_plus) {
        theta = std::numbers::pi - axis_theta;
        phi = std::fmod(axis_phi + std::numbers::pi, kTwoPi);
        p = 1.0 - p_plus;
    }
    ProjectionResult r = apply_projector(psi, site, theta, phi);
    MeasurementEvent ev;
    ev.site = site;
    ev.theta = theta;
    ev.phi = phi;
    ev.time = time;
    ev.born_probability = p;
    return {std::move(r.state), ev};
}

std::pair<double, double> sample_axis(rng::Engine& gen) {
    std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, kTwoPi);
    const double c = cos_theta(gen);
    return {std::acos(c), phi(gen)};
}

Schedule build_schedule(ScheduleMode mode, int n_events, int n_sites, double delay_low,
                        double delay_high, bool periodic, rng::Engine& gen) {
    if (delay_low > delay_high)
        throw std::invalid_argument("build_schedule: delay_low > delay_high");
    if (n_events < 0) throw std::invalid_argument("build_schedule: n_events < 0");
    if (mode == ScheduleMode::Pair && n_sites < 2)
        throw std::invalid_argument("build_schedule: pair mode needs n_sites >= 2");

    Schedule sch;
    sch.mode = mode;
    sch.n_events = n_events;
    std::uniform_real_distribution<double> delay(delay_low, delay_high);
    std::uniform_int_distribution<int> site(0, n_sites - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int e = 0; e < n_events; ++e) {
        sch.delays.push_back(delay(gen));
        const bool even_event = (e % 2 == 1);  // events counted from 1
        if (mode == ScheduleMode::Single || !even_event) {
            sch.sites.push_back(site(gen));
            continue;
        }
        const int prev = sch.sites.back();
        if (periodic && n_sites >= 3) {
            const int step = coin(gen) < 0.5 ? 1 : n_sites - 1;
            sch.sites.push_back((prev + step) % n_sites);
        } else if (prev == 0) {
            sch.sites.push_back(1);
        } else if (prev == n_sites - 1) {
            sch.sites.push_back(n_sites - 2);
        } else {
            sch.sites.push_back(prev + (coin(gen) < 0.5 ? 1 : -1));
        }
    }
    const double mean_delay = 0.5 * (delay_low + delay_high);
    const double tau_m = mean_delay * n_sites * (mode == ScheduleMode::Pair ? 2.0 : 1.0);
    sch.mean_rate = tau_m > 0.0 ? 1.0 / tau_m : 0.0;
    return sch;
}

}  // namespace stab
