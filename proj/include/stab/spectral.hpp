// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stab/distribution.hpp"
#include "stab/hamiltonian.hpp"
#include "stab/state.hpp"

namespace stab {

/// g(E) from the exact eigenbasis: density[b] = sum_{k in bin b} |<E_k|psi>|^2 / bin_width.
/// The spectrum must carry eigenvectors.
EnergyDistribution exact_binned_g(const SpinState& psi, const Spectrum& spectrum,
                                  double bin_width);

/// Discrete autocorrelation series c_k = <psi(k dt)|psi(0)>.
struct AutocorrSeries {
    cvec samples;
    double dt = 0.0;
    int n_samples() const { return static_cast<int>(samples.size()); }
};

AutocorrSeries autocorrelation_series(const HamiltonianSpec& spec, const SpinState& psi,
                                      double dt, int n_samples);

/// Kaiser-Bessel window K(k) = I0(pi*alpha*sqrt(1-(2k/(N-1)-1)^2)) / I0(pi*alpha),
/// 0 <= k < n_samples. I0 via power series to relative error 1e-12.
double kaiser_bessel_window(int k, int n_samples, double alpha);

/// Windowed Fourier estimate of g(E) on the requested grid. The series is
/// extended to negative times by conjugate symmetry and windowed with the
/// Kaiser-Bessel taper, so an eigenstate series exp(+i E_k t) produces a
/// real kernel peaked at +E_k. Negative leakage is clipped to zero and the
/// result renormalized. A grid that does not cover the Nyquist range pi/dt
/// gets a diagnostic note in the output.
EnergyDistribution spectral_g(const AutocorrSeries& series, double alpha,
                              const EnergyGrid& grid);

}  // namespace stab
