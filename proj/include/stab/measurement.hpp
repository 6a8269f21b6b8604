// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "stab/state.hpp"

namespace stab {

/// Raised when a projection meets an (almost exactly) orthogonal state.
/// The caller must resample; the input state is left untouched.
struct OrthogonalOutcomeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One projective measurement record. (theta, phi) is the orientation of the
/// spin after the measurement; born_probability the weight of that outcome.
struct MeasurementEvent {
    int site = 0;
    double theta = 0.0;
    double phi = 0.0;
    double time = 0.0;
    double born_probability = 1.0;
};

struct ProjectionResult {
    SpinState state;
    double probability;  // Born weight <psi|P|psi>
};

/// Applies P = |theta,phi><theta,phi| at `site` (identity elsewhere) and
/// renormalizes. Throws OrthogonalOutcomeError when the Born weight is
/// below 1e-14.
ProjectionResult apply_projector(const SpinState& psi, int site, double theta, double phi);

/// Born-samples the outcome along the given axis: with probability
/// <psi|P(axis)|psi> the spin ends up along (axis_theta, axis_phi), otherwise
/// along the antipode (pi - theta, phi + pi). Returns the renormalized state
/// and the event with the realized orientation.
std::pair<SpinState, MeasurementEvent> measure_spin(const SpinState& psi, int site,
                                                    double axis_theta, double axis_phi,
                                                    rng::Engine& gen, double time = 0.0);

/// Uniform direction on the sphere: cos(theta) ~ U[-1,1], phi ~ U[0,2pi).
std::pair<double, double> sample_axis(rng::Engine& gen);

enum class ScheduleMode { Single, Pair };

/// Measurement schedule: sites and inter-measurement delays. In pair mode
/// every even-numbered event (1-based) addresses a nearest neighbour of the
/// preceding event's site.
struct Schedule {
    ScheduleMode mode = ScheduleMode::Single;
    std::vector<int> sites;
    std::vector<double> delays;
    double mean_rate = 0.0;  // per-spin rate 1/tau_m implied by the delay draw
    int n_events = 0;
};

Schedule build_schedule(ScheduleMode mode, int n_events, int n_sites,
                        double delay_low, double delay_high, bool periodic,
                        rng::Engine& gen);

}  // namespace stab
