// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "stab/state.hpp"

namespace stab {

/// Dense column-major complex matrix. Small helper for eigenbasis work;
/// the production Hamiltonian application never materializes a matrix.
struct CMatrix {
    std::size_t rows = 0, cols = 0;
    cvec a;  // column-major, a[i + j*rows]

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, cplx{0.0, 0.0}) {}

    cplx& at(std::size_t i, std::size_t j) { return a[i + j * rows]; }
    const cplx& at(std::size_t i, std::size_t j) const { return a[i + j * rows]; }
    bool empty() const { return a.empty(); }

    cplx* col(std::size_t j) { return a.data() + j * rows; }
    const cplx* col(std::size_t j) const { return a.data() + j * rows; }
};

/// C = A * B (cblas-backed).
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// C = A^dagger * B.
CMatrix matmul_adj(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& a);

/// y = A x (plain loop; deterministic regardless of thread configuration).
cvec matvec(const CMatrix& a, const cvec& x);

/// y = A^dagger x. Used for eigenbasis projections.
cvec matvec_adj(const CMatrix& a, const cvec& x);

}  // namespace stab
