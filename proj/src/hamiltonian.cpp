// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stab {

HamiltonianSpec HamiltonianSpec::field(int n_sites, double h_z) {
    if (n_sites < 1) throw std::invalid_argument("HamiltonianSpec: n_sites must be >= 1");
    HamiltonianSpec s;
    s.kind = HamiltonianKind::Field;
    s.n_sites = n_sites;
    s.h_z = h_z;
    return s;
}

HamiltonianSpec HamiltonianSpec::xyz(int n_sites, double j_x, double j_y, double j_z,
                                     bool periodic) {
    if (n_sites < 1) throw std::invalid_argument("HamiltonianSpec: n_sites must be >= 1");
    HamiltonianSpec s;
    s.kind = HamiltonianKind::XYZ;
    s.n_sites = n_sites;
    s.j_x = j_x;
    s.j_y = j_y;
    s.j_z = j_z;
    s.periodic = periodic;
    return s;
}

std::vector<std::pair<int, int>> HamiltonianSpec::bonds() const {
    std::vector<std::pair<int, int>> b;
    if (kind != HamiltonianKind::XYZ) return b;
    for (int i = 0; i + 1 < n_sites; ++i) b.emplace_back(i, i + 1);
    // the wrap bond would duplicate the single bond of a 2-site chain
    if (periodic && n_sites >= 3) b.emplace_back(n_sites - 1, 0);
    return b;
}

double HamiltonianSpec::norm_bound() const {
    if (kind == HamiltonianKind::Field) return std::abs(h_z) * n_sites / 2.0;
    double per_bond = (std::abs(j_x) + std::abs(j_y) + std::abs(j_z)) / 4.0;
    return per_bond * static_cast<double>(bonds().size());
}

HamiltonianOperator::HamiltonianOperator(const HamiltonianSpec& spec) : spec_(spec) {
    const std::size_t dim = spec_.dim();
    diag_.assign(dim, 0.0);
    if (spec_.kind == HamiltonianKind::Field) {
        // H = -h_z sum_i S_iz; basis state energy h_z * (popcount - n/2)
        for (std::size_t x = 0; x < dim; ++x)
            diag_[x] = spec_.h_z * (static_cast<double>(std::popcount(x)) - spec_.n_sites / 2.0);
        return;
    }
    for (auto [i, j] : spec_.bonds()) {
        const std::size_t mi = std::size_t{1} << i;
        const std::size_t mj = std::size_t{1} << j;
        FlipTerm f;
        f.mask = mi | mj;
        f.bit_i = mi;
        f.bit_j = mj;
        f.coeff_equal = -(spec_.j_x - spec_.j_y) / 4.0;
        f.coeff_diff = -(spec_.j_x + spec_.j_y) / 4.0;
        flips_.push_back(f);
        for (std::size_t x = 0; x < dim; ++x) {
            const bool equal = ((x & mi) != 0) == ((x & mj) != 0);
            diag_[x] += -spec_.j_z * (equal ? 0.25 : -0.25);
        }
    }
}

void HamiltonianOperator::apply(const cvec& in, cvec& out) const {
    const std::size_t dim = spec_.dim();
    if (in.size() != dim) throw std::invalid_argument("HamiltonianOperator::apply: dimension mismatch");
    out.resize(dim);
    for (std::size_t x = 0; x < dim; ++x) out[x] = diag_[x] * in[x];
    for (const FlipTerm& f : flips_) {
        for (std::size_t x = 0; x < dim; ++x) {
            const bool equal = ((x & f.bit_i) != 0) == ((x & f.bit_j) != 0);
            out[x ^ f.mask] += (equal ? f.coeff_equal : f.coeff_diff) * in[x];
        }
    }
}

SpinState apply_hamiltonian(const HamiltonianSpec& spec, const SpinState& psi) {
    if (psi.dim() != spec.dim())
        throw std::invalid_argument("apply_hamiltonian: state does not match 2^n_sites");
    HamiltonianOperator op(spec);
    SpinState out = SpinState::zero(spec.n_sites);
    op.apply(psi.amp, out.amp);
    return out;
}

double energy_expectation(const HamiltonianSpec& spec, const SpinState& psi) {
    if (psi.dim() != spec.dim())
        throw std::invalid_argument("energy_expectation: state does not match 2^n_sites");
    if (!psi.is_normalized(1e-6))
        throw std::invalid_argument("energy_expectation: state is not normalized");
    SpinState h_psi = apply_hamiltonian(spec, psi);
    cplx e = inner(psi, h_psi);
    if (std::abs(e.imag()) > 1e-10)
        throw std::runtime_error("energy_expectation: imaginary residue above 1e-10");
    return e.real();
}

}  // namespace stab
