// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include <lapacke.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stab/hamiltonian.hpp"

namespace stab {

namespace {

// Desk-scale caps for the exact path. The field ladder is analytic, so only
// materializing eigenvectors limits it; the XYZ path is bounded by the dense
// solver's O(dim^2) memory.
constexpr int kVectorCap = 13;
constexpr int kFieldValueCap = 24;
constexpr int kXyzValueCap = 14;

Spectrum field_spectrum(const HamiltonianSpec& spec, bool want_vectors) {
    const std::size_t dim = spec.dim();
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> level(dim);
    for (std::size_t x = 0; x < dim; ++x)
        level[x] = spec.h_z * (static_cast<double>(std::popcount(x)) - spec.n_sites / 2.0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return level[a] < level[b]; });

    Spectrum s;
    s.eigenvalues.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) s.eigenvalues[k] = level[order[k]];
    if (want_vectors) {
        s.eigenvectors = CMatrix(dim, dim);
        for (std::size_t k = 0; k < dim; ++k) s.eigenvectors.at(order[k], k) = cplx{1.0, 0.0};
    }
    s.e_min = s.eigenvalues.front();
    s.e_max = s.eigenvalues.back();
    return s;
}

Spectrum xyz_spectrum(const HamiltonianSpec& spec, bool want_vectors) {
    const std::size_t dim = spec.dim();
    // dense column-major Hermitian assembly
    CMatrix h(dim, dim);
    HamiltonianOperator op(spec);
    cvec unit(dim), col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::fill(unit.begin(), unit.end(), cplx{0.0, 0.0});
        unit[j] = cplx{1.0, 0.0};
        op.apply(unit, col);
        std::copy(col.begin(), col.end(), h.col(j));
    }

    std::vector<double> w(dim);
    lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', static_cast<lapack_int>(dim),
        reinterpret_cast<lapack_complex_double*>(h.a.data()), static_cast<lapack_int>(dim),
        w.data());
    if (info != 0)
        throw std::runtime_error("exact_spectrum: zheevd failed with info " + std::to_string(info));

    Spectrum s;
    s.eigenvalues = std::move(w);
    if (want_vectors) s.eigenvectors = std::move(h);
    s.e_min = s.eigenvalues.front();
    s.e_max = s.eigenvalues.back();
    return s;
}

}  // namespace

Spectrum exact_spectrum(const HamiltonianSpec& spec, bool want_vectors) {
    const int cap = want_vectors ? kVectorCap
                    : (spec.kind == HamiltonianKind::Field ? kFieldValueCap : kXyzValueCap);
    if (spec.n_sites > cap)
        throw std::invalid_argument("exact_spectrum: n_sites = " + std::to_string(spec.n_sites) +
                                    " too large for exact path (cap " + std::to_string(cap) + ")");
    return spec.kind == HamiltonianKind::Field ? field_spectrum(spec, want_vectors)
                                               : xyz_spectrum(spec, want_vectors);
}

double canonical_width(const Spectrum& spectrum, double T) {
    if (T == 0.0) throw std::invalid_argument("canonical_width: T = 0 (degenerate ensemble)");
    if (spectrum.eigenvalues.size() < 2 || spectrum.e_max == spectrum.e_min)
        throw std::invalid_argument("canonical_width: need at least two distinct levels");
    // shift so that the largest Boltzmann weight is exactly 1
    const double e_ref = T > 0 ? spectrum.e_min : spectrum.e_max;
    double z = 0.0, m1 = 0.0, m2 = 0.0;
    for (double e : spectrum.eigenvalues) {
        const double w = std::exp(-(e - e_ref) / T);
        z += w;
        m1 += w * e;
        m2 += w * e * e;
    }
    m1 /= z;
    m2 /= z;
    const double var = std::max(m2 - m1 * m1, 0.0);
    return std::sqrt(var);
}

double canonical_energy(const Spectrum& spectrum, double T) {
    if (T == 0.0) throw std::invalid_argument("canonical_energy: T = 0");
    const double e_ref = T > 0 ? spectrum.e_min : spectrum.e_max;
    double z = 0.0, m1 = 0.0;
    for (double e : spectrum.eigenvalues) {
        const double w = std::exp(-(e - e_ref) / T);
        z += w;
        m1 += w * e;
    }
    return m1 / z;
}

}  // namespace stab
