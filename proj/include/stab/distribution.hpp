// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace stab {

/// Uniform energy grid. Bin i spans [lo + i*w, lo + (i+1)*w]. Grids built
/// from a spectrum place e_min and e_max at bin centers and pad two full
/// bins beyond each edge.
struct EnergyGrid {
    double lo = 0.0;
    double bin_width = 1.0;
    int n_bins = 0;

    double center(int i) const { return lo + (i + 0.5) * bin_width; }
    double hi() const { return lo + n_bins * bin_width; }
    int bin_of(double energy) const;  // clamped to [0, n_bins-1]

    static EnergyGrid covering(double e_min, double e_max, double bin_width);

    bool same_as(const EnergyGrid& other, double tol = 1e-9) const;
};

/// Binned probability density of the total energy, normalized so that
/// sum(density) * bin_width = 1.
struct EnergyDistribution {
    EnergyGrid grid;
    std::vector<double> density;
    std::vector<std::string> notes;  // estimator diagnostics, not serialized

    double integral() const;
    void normalize();  // throws on zero mass
};

/// L1 distance sum |a - b| * bin_width; grids must match. Range [0, 2].
double delta_g(const EnergyDistribution& a, const EnergyDistribution& b);

/// (mean, standard deviation) under the binned density.
std::pair<double, double> distribution_moments(const EnergyDistribution& g);

/// Linear-interpolation resample onto another grid, renormalized.
EnergyDistribution resample(const EnergyDistribution& g, const EnergyGrid& grid);

/// CSV: header `bin_center,density`, 17 significant digits.
void write_csv(const EnergyDistribution& g, std::ostream& out);

}  // namespace stab
