// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/state.hpp"

#include <cmath>
#include <stdexcept>

namespace stab {

SpinState::SpinState(int sites, cvec amplitudes) : n_sites(sites), amp(std::move(amplitudes)) {
    if (amp.size() != (std::size_t{1} << n_sites))
        throw std::invalid_argument("SpinState: amplitude count does not match 2^n_sites");
}

SpinState SpinState::zero(int n_sites) {
    SpinState s;
    s.n_sites = n_sites;
    s.amp.assign(std::size_t{1} << n_sites, cplx{0.0, 0.0});
    return s;
}

SpinState SpinState::basis(int n_sites, std::size_t index) {
    SpinState s = zero(n_sites);
    if (index >= s.dim()) throw std::invalid_argument("SpinState::basis: index out of range");
    s.amp[index] = cplx{1.0, 0.0};
    return s;
}

double SpinState::norm() const {
    double s = 0.0;
    for (const cplx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void SpinState::normalize() {
    double n = norm();
    if (n < 1e-300) throw std::runtime_error("SpinState::normalize: zero state");
    for (cplx& a : amp) a /= n;
}

bool SpinState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

cplx inner(const SpinState& a, const SpinState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

namespace rng {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Engine engine_for(std::uint64_t master_seed, std::uint64_t stream) {
    return Engine(mix(master_seed + 0x9E3779B97F4A7C15ULL * (stream + 1)));
}

}  // namespace rng

}  // namespace stab
