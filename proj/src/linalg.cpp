// Copyright 2026 The stab authors
// SPDX-License-Identifier: Apache-2.0

#include "stab/linalg.hpp"

#include <cblas.h>

#include <stdexcept>

namespace stab {

namespace {
const cplx kOne{1.0, 0.0};
const cplx kZero{0.0, 0.0};
}  // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix c(a.rows, b.cols);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows),
                static_cast<int>(b.cols), static_cast<int>(a.cols), &kOne, a.a.data(),
                static_cast<int>(a.rows), b.a.data(), static_cast<int>(b.rows), &kZero,
                c.a.data(), static_cast<int>(c.rows));
    return c;
}

CMatrix matmul_adj(const CMatrix& a, const CMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("matmul_adj: shape mismatch");
    CMatrix c(a.cols, b.cols);
    cblas_zgemm(CblasColMajor, CblasConjTrans, CblasNoTrans, static_cast<int>(a.cols),
                static_cast<int>(b.cols), static_cast<int>(a.rows), &kOne, a.a.data(),
                static_cast<int>(a.rows), b.a.data(), static_cast<int>(b.rows), &kZero,
                c.a.data(), static_cast<int>(c.rows));
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix t(a.cols, a.rows);
    for (std::size_t j = 0; j < a.cols; ++j)
        for (std::size_t i = 0; i < a.rows; ++i) t.at(j, i) = std::conj(a.at(i, j));
    return t;
}

cvec matvec(const CMatrix& a, const cvec& x) {
    if (x.size() != a.cols) throw std::invalid_argument("matvec: shape mismatch");
    cvec y(a.rows, kZero);
    for (std::size_t j = 0; j < a.cols; ++j) {
        const cplx xj = x[j];
        const cplx* cj = a.col(j);
        for (std::size_t i = 0; i < a.rows; ++i) y[i] += cj[i] * xj;
    }
    return y;
}

cvec matvec_adj(const CMatrix& a, const cvec& x) {
    if (x.size() != a.rows) throw std::invalid_argument("matvec_adj: shape mismatch");
    cvec y(a.cols, kZero);
    for (std::size_t j = 0; j < a.cols; ++j) {
        const cplx* cj = a.col(j);
        cplx s = kZero;
        for (std::size_t i = 0; i < a.rows; ++i) s += std::conj(cj[i]) * x[i];
        y[j] = s;
    }
    return y;
}

}  // namespace stab
