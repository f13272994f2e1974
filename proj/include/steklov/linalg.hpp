// linalg.hpp -- dense column-count-known-at-runtime matrices, LU solves
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

// Row-major dense matrix, just big enough for the finite-difference
// elimination blocks (a few hundred rows).
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t nn) {
        Matrix m(nn, nn);
        for (std::size_t i = 0; i < nn; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

// LU with partial pivoting, factor stored in place.
struct LU {
    Matrix lu;
    std::vector<std::size_t> perm;

    explicit LU(Matrix m) : lu(std::move(m)), perm(lu.rows) {
        const std::size_t nn = lu.rows;
        for (std::size_t i = 0; i < nn; ++i) perm[i] = i;
        for (std::size_t k = 0; k < nn; ++k) {
            std::size_t p = k;
            double best = std::abs(lu(k, k));
            for (std::size_t i = k + 1; i < nn; ++i) {
                const double v = std::abs(lu(i, k));
                if (v > best) { best = v; p = i; }
            }
            if (best == 0.0) throw SingularSchur("LU: exactly singular pivot");
            if (p != k) {
                for (std::size_t j = 0; j < nn; ++j) std::swap(lu.a[k * nn + j], lu.a[p * nn + j]);
                std::swap(perm[k], perm[p]);
            }
            const double piv = lu(k, k);
            for (std::size_t i = k + 1; i < nn; ++i) {
                const double f = lu(i, k) / piv;
                lu(i, k) = f;
                if (f == 0.0) continue;
                for (std::size_t j = k + 1; j < nn; ++j) lu(i, j) -= f * lu(k, j);
            }
        }
    }

    // x := A^{-1} b
    std::vector<double> solve(const std::vector<double>& b) const {
        const std::size_t nn = lu.rows;
        std::vector<double> x(nn);
        for (std::size_t i = 0; i < nn; ++i) x[i] = b[perm[i]];
        for (std::size_t i = 1; i < nn; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
        for (std::size_t i = nn; i-- > 0;) {
            for (std::size_t j = i + 1; j < nn; ++j) x[i] -= lu(i, j) * x[j];
            x[i] /= lu(i, i);
        }
        return x;
    }

    // X := A^{-1} B, column by column through the permuted factors.
    Matrix solve(const Matrix& b) const {
        const std::size_t nn = lu.rows;
        Matrix x(nn, b.cols);
        std::vector<double> col(nn);
        for (std::size_t j = 0; j < b.cols; ++j) {
            for (std::size_t i = 0; i < nn; ++i) col[i] = b(perm[i], j);
            for (std::size_t i = 1; i < nn; ++i)
                for (std::size_t k = 0; k < i; ++k) col[i] -= lu(i, k) * col[k];
            for (std::size_t i = nn; i-- > 0;) {
                for (std::size_t k = i + 1; k < nn; ++k) col[i] -= lu(i, k) * col[k];
                col[i] /= lu(i, i);
            }
            for (std::size_t i = 0; i < nn; ++i) x(i, j) = col[i];
        }
        return x;
    }
};

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

}  // namespace steklov
