// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stab {

int EnergyGrid::bin_of(double energy) const {
    const int b = static_cast<int>(std::floor((energy - lo) / bin_width));
    return std::clamp(b, 0, n_bins - 1);
}

EnergyGrid EnergyGrid::covering(double e_min, double e_max, double bin_width) {
    if (!(e_max > e_min)) throw std::invalid_argument("EnergyGrid: e_max must exceed e_min");
    if (!(bin_width > 0.0)) throw std::invalid_argument("EnergyGrid: bin_width must be > 0");
    // e_min sits at a bin center with two padding bins below; this keeps the
    // spectrum edges away from bin boundaries.
    const int interior = static_cast<int>(std::ceil((e_max - e_min) / bin_width - 1e-9));
    EnergyGrid g;
    g.bin_width = bin_width;
    g.lo = e_min - 2.5 * bin_width;
    g.n_bins = interior + 5;
    return g;
}

bool EnergyGrid::same_as(const EnergyGrid& other, double tol) const {
    return n_bins == other.n_bins && std::abs(lo - other.lo) <= tol &&
           std::abs(bin_width - other.bin_width) <= tol;
}

double EnergyDistribution::integral() const {
    double s = 0.0;
    for (double d : density) s += d;
    return s * grid.bin_width;
}

void EnergyDistribution::normalize() {
    const double z = integral();
    if (z <= 0.0) throw std::runtime_error("EnergyDistribution::normalize: zero mass");
    for (double& d : density) d /= z;
}

double delta_g(const EnergyDistribution& a, const EnergyDistribution& b) {
    if (!a.grid.same_as(b.grid))
        throw std::invalid_argument("delta_g: grids differ (resample first)");
    double s = 0.0;
    for (int i = 0; i < a.grid.n_bins; ++i) s += std::abs(a.density[i] - b.density[i]);
    return s * a.grid.bin_width;
}

std::pair<double, double> distribution_moments(const EnergyDistribution& g) {
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < g.grid.n_bins; ++i) {
        const double w = g.density[i] * g.grid.bin_width;
        const double e = g.grid.center(i);
        m1 += w * e;
        m2 += w * e * e;
    }
    return {m1, std::sqrt(std::max(m2 - m1 * m1, 0.0))};
}

EnergyDistribution resample(const EnergyDistribution& g, const EnergyGrid& grid) {
    EnergyDistribution out;
    out.grid = grid;
    out.density.assign(grid.n_bins, 0.0);
    for (int i = 0; i < grid.n_bins; ++i) {
        const double e = grid.center(i);
        const double pos = (e - g.grid.lo) / g.grid.bin_width - 0.5;
        const int j = static_cast<int>(std::floor(pos));
        const double f = pos - j;
        double v = 0.0;
        if (j >= 0 && j < g.grid.n_bins) v += (1.0 - f) * g.density[j];
        if (j + 1 >= 0 && j + 1 < g.grid.n_bins) v += f * g.density[j + 1];
        out.density[i] = std::max(v, 0.0);
    }
    out.normalize();
    return out;
}

void write_csv(const EnergyDistribution& g, std::ostream& out) {
    out << "bin_center,density\n";
    char buf[96];
    for (int i = 0; i < g.grid.n_bins; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", g.grid.center(i), g.density[i]);
        out << buf;
    }
}

}  // namespace stab
