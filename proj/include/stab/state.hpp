// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace stab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Pure state of a chain of spins-1/2 over the 2^n product basis.
/// Bit i of the basis index encodes spin i along z: 0 = up, 1 = down.
struct SpinState {
    int n_sites = 0;
    cvec amp;

    SpinState() = default;
    SpinState(int sites, cvec amplitudes);

    static SpinState zero(int n_sites);
    static SpinState basis(int n_sites, std::size_t index);

    std::size_t dim() const { return amp.size(); }
    double norm() const;
    void normalize();  // throws on (near-)zero vector
    bool is_normalized(double tol = 1e-6) const;
};

/// <a|b> with the conjugate on the first argument.
cplx inner(const SpinState& a, const SpinState& b);

namespace rng {

using Engine = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix(std::uint64_t x);

/// Independent substream engine for (master seed, stream index).
Engine engine_for(std::uint64_t master_seed, std::uint64_t stream);

}  // namespace rng

}  // namespace stab
