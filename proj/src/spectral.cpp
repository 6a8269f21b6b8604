// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stab/evolution.hpp"

namespace stab {

namespace {

// I0(x) by power series, relative error 1e-12.
double bessel_i0(double x) {
    const double q = x * x / 4.0;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 1000; ++m) {
        term *= q / (static_cast<double>(m) * m);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

}  // namespace

EnergyDistribution exact_binned_g(const SpinState& psi, const Spectrum& spectrum,
                                  double bin_width) {
    if (!spectrum.has_vectors())
        throw std::invalid_argument("exact_binned_g: spectrum carries no eigenvectors");
    if (psi.dim() != spectrum.eigenvalues.size())
        throw std::invalid_argument("exact_binned_g: dimension mismatch");

    EnergyDistribution g;
    g.grid = EnergyGrid::covering(spectrum.e_min, spectrum.e_max, bin_width);
    g.density.assign(g.grid.n_bins, 0.0);
    const cvec overlaps = matvec_adj(spectrum.eigenvectors, psi.amp);
    for (std::size_t k = 0; k < overlaps.size(); ++k)
        g.density[g.grid.bin_of(spectrum.eigenvalues[k])] += std::norm(overlaps[k]);
    for (double& d : g.density) d /= g.grid.bin_width;
    g.normalize();
    return g;
}

AutocorrSeries autocorrelation_series(const HamiltonianSpec& spec, const SpinState& psi,
                                      double dt, int n_samples) {
    if (!psi.is_normalized(1e-6))
        throw std::invalid_argument("autocorrelation_series: state is not normalized");
    if (n_samples < 1) throw std::invalid_argument("autocorrelation_series: n_samples < 1");

    AutocorrSeries series;
    series.dt = dt;
    series.samples.reserve(n_samples);

    HamiltonianOperator op(spec);
    SpinState moving = psi;
    cvec k1(psi.dim()), k2(psi.dim());
    series.samples.push_back(inner(moving, psi));  // = 1
    for (int k = 1; k < n_samples; ++k) {
        taylor4_step_inplace(op, moving.amp, cplx{0.0, -dt}, k1, k2);
        series.samples.push_back(inner(moving, psi));
    }
    return series;
}

double kaiser_bessel_window(int k, int n_samples, double alpha) {
    if (k < 0 || k >= n_samples) throw std::invalid_argument("kaiser_bessel_window: k out of range");
    if (n_samples == 1) return 1.0;
    const double y = 2.0 * k / (n_samples - 1.0) - 1.0;
    const double arg = std::numbers::pi * alpha * std::sqrt(std::max(1.0 - y * y, 0.0));
    return bessel_i0(arg) / bessel_i0(std::numbers::pi * alpha);
}

EnergyDistribution spectral_g(const AutocorrSeries& series, double alpha,
                              const EnergyGrid& grid) {
    const int n = series.n_samples();
    if (n < 64) throw std::invalid_argument("spectral_g: series shorter than 64 samples");
    const double dt = series.dt;

    // The series is extended to negative times by c(-t) = conj(c(t)), so the
    // estimate is a real kernel sum: the Kaiser-Bessel taper, over 2n-1 points,
    // multiplies the two-sided series. Per-bin values are bin averages of the
    // transform (the sinc factor), matching the histogram semantics of
    // exact_binned_g.
    EnergyDistribution g;
    g.grid = grid;
    g.density.assign(grid.n_bins, 0.0);

    std::vector<double> win(n), sinc(n);
    for (int j = 0; j < n; ++j) {
        win[j] = kaiser_bessel_window(j + n - 1, 2 * n - 1, alpha);
        if (j == 0) {
            sinc[j] = 1.0;
        } else {
            const double x = j * dt * grid.bin_width / 2.0;
            sinc[j] = std::sin(x) / x;
        }
    }

    const double norm = dt / (2.0 * std::numbers::pi);
    for (int b = 0; b < grid.n_bins; ++b) {
        const double e = grid.center(b);
        // accumulate Re sum_j eta_j K_j sinc_j c_j e^{-i e j dt} via a phase recurrence
        const cplx step = std::polar(1.0, -e * dt);
        cplx phase{1.0, 0.0};
        double acc = win[0] * sinc[0] * series.samples[0].real();
        for (int j = 1; j < n; ++j) {
            phase *= step;
            const cplx term = series.samples[j] * phase;
            acc += 2.0 * win[j] * sinc[j] * term.real();
        }
        g.density[b] = std::max(norm * acc, 0.0);
    }

    const double nyquist = std::numbers::pi / dt;
    if (grid.lo > -nyquist || grid.hi() < nyquist)
        g.notes.push_back("grid narrower than the Nyquist range pi/dt; spectral mass outside the grid is dropped");
    g.normalize();
    return g;
}

}  // namespace stab
