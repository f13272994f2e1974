// oracle.hpp -- independent checks: concentric closed form, finite differences
// SPDX-License-Identifier: MIT
//
// The finite-difference route never touches the series solver. It discretizes
// the separated equation
//   A_xixi + A_thth + n cot(theta) A_th - (n^2/4) A = 0
// on a uniform grid over [xi2, xi1] x [0, pi] with Dirichlet A = 0 at xi1 and
// the sigma-linear Robin row at xi2,
//   (cosh xi2 - cos theta) A_xi + ((n/2) sinh xi2 + alpha sigma) A = 0,
// then eliminates all interior columns onto the xi2 row: with D the interior
// block and A_i the column at grid line i, A_i = P_i A_{i-1} where
//   P_{last} = -(1/h^2) D^{-1},   P_i = -(D + (1/h^2) P_{i+1})^{-1} (1/h^2).
// Substituting A_1 = P_1 A_0, A_2 = P_2 P_1 A_0 into the one-sided
// second-order Robin row gives a dense eigenproblem G A_0 = sigma A_0 of size
// N_theta + 1 whose smallest eigenvalue is the discrete sigma.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "steklov/errors.hpp"
#include "steklov/geometry.hpp"
#include "steklov/linalg.hpp"

namespace steklov {

// First Steklov-Dirichlet eigenvalue of the concentric annulus r1 < |x| < r2
// in dimension n+2 (radial mode b(r^{-n} - r1^{-n})): n/(r2((r2/r1)^n - 1)).
inline double concentric_sigma(int n, double r1, double r2) {
    if (!(n >= 1) || !(0.0 < r1 && r1 < r2))
        throw BadRadii("concentric_sigma: need n >= 1 and 0 < r1 < r2");
    return n / (r2 * (std::pow(r2 / r1, n) - 1.0));
}

struct FdSolution {
    int n = 0;
    double r1 = 0, r2 = 0, t = 0;
    std::size_t N_xi = 0, N_th = 0;
    double h_xi = 0, h_th = 0;
    double sigma = 0;
    int iterations = 0;
    double residual = 0;              // ||G v - sigma v||_2 / ||G||_inf
    std::vector<double> boundary;     // A at the xi2 row, sign-fixed positive, max 1
    std::vector<double> grid;         // (N_xi+1) x (N_th+1) row-major; row N_xi is 0
};

namespace detail {

// Angular operator with the pole rule at theta = 0, pi (ghost-node symmetry
// turns A_thth + n cot th A_th into (n+1) A_thth, discretized one-sidedly).
inline Matrix angular_block(int n, std::size_t N_th, double h_th) {
    const std::size_t K = N_th + 1;
    Matrix Th(K, K);
    const double ih2 = 1.0 / (h_th * h_th);
    Th(0, 0) = -2.0 * (n + 1) * ih2;
    Th(0, 1) = 2.0 * (n + 1) * ih2;
    Th(N_th, N_th) = -2.0 * (n + 1) * ih2;
    Th(N_th, N_th - 1) = 2.0 * (n + 1) * ih2;
    for (std::size_t j = 1; j < N_th; ++j) {
        const double th = h_th * static_cast<double>(j);
        const double cot = std::cos(th) / std::sin(th);
        Th(j, j - 1) = ih2 - n * cot / (2.0 * h_th);
        Th(j, j) = -2.0 * ih2;
        Th(j, j + 1) = ih2 + n * cot / (2.0 * h_th);
    }
    return Th;
}

inline double inf_norm(const Matrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) row += std::abs(m(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

// Smallest eigenpair of the reduced dense matrix by inverse power iteration:
// shift 0 locks onto the eigenvalue nearest zero (the spectrum near zero is
// real, positive and well separated), then Rayleigh-quotient shifts polish to
// the 1e-12 residual target.
inline void smallest_dense_eigenpair(const Matrix& G, double& value,
                                     std::vector<double>& vec, int& iters,
                                     double& resid) {
    const std::size_t K = G.rows;
    const double scale = inf_norm(G);
    std::vector<double> v(K, 1.0 / std::sqrt(static_cast<double>(K)));
    double mu = 0.0;
    LU base(G);
    for (iters = 1; iters <= 100; ++iters) {
        std::vector<double> y;
        if (iters <= 4) {
            y = base.solve(v);
        } else {
            Matrix Gs = G;
            for (std::size_t i = 0; i < K; ++i) Gs(i, i) -= mu;
            y = LU(Gs).solve(v);
        }
        const double nrm = norm2(y);
        for (double& x : y) x /= nrm;
        // Rayleigh quotient y^T G y
        double num = 0.0;
        for (std::size_t i = 0; i < K; ++i) {
            double gi = 0.0;
            for (std::size_t j = 0; j < K; ++j) gi += G(i, j) * y[j];
            num += y[i] * gi;
        }
        mu = num;
        double rr = 0.0;
        for (std::size_t i = 0; i < K; ++i) {
            double gi = 0.0;
            for (std::size_t j = 0; j < K; ++j) gi += G(i, j) * y[j];
            const double d = gi - mu * y[i];
            rr += d * d;
        }
        resid = std::sqrt(rr) / scale;
        v = y;
        if (resid <= 1e-12) {
            value = mu;
            vec = v;
            return;
        }
    }
    throw NotConverged("fd_sigma: inverse iteration missed the 1e-12 residual target");
}

}  // namespace detail

inline FdSolution fd_sigma(const AnnulusGeometry& g, std::size_t N_xi, std::size_t N_th) {
    if (N_xi < 32 || N_th < 32) throw BadGrid("fd_sigma: need N_xi, N_theta >= 32");
    if (N_xi > 384 || N_th > 384)
        throw BadGrid("fd_sigma: grid above 384 exceeds the dense elimination budget");
    FdSolution f;
    f.n = g.n;
    f.r1 = g.r1;
    f.r2 = g.r2;
    f.t = g.t;
    f.N_xi = N_xi;
    f.N_th = N_th;
    f.h_xi = (g.xi1 - g.xi2) / static_cast<double>(N_xi);
    f.h_th = M_PI / static_cast<double>(N_th);
    const std::size_t K = N_th + 1;
    const double ih2 = 1.0 / (f.h_xi * f.h_xi);

    Matrix D = detail::angular_block(g.n, N_th, f.h_th);
    const double shift = 2.0 * ih2 + 0.25 * g.n * g.n;
    for (std::size_t j = 0; j < K; ++j) D(j, j) -= shift;

    // back-substitution blocks, i = N_xi-1 down to 1
    std::vector<Matrix> P(N_xi);  // P[i] valid for 1 <= i <= N_xi-1
    Matrix rhs(K, K);
    for (std::size_t j = 0; j < K; ++j) rhs(j, j) = -ih2;
    for (std::size_t i = N_xi - 1; i >= 1; --i) {
        Matrix Mi = D;
        if (i + 1 <= N_xi - 1) {
            const Matrix& Pn = P[i + 1];
            for (std::size_t r = 0; r < K; ++r)
                for (std::size_t c = 0; c < K; ++c) Mi(r, c) += ih2 * Pn(r, c);
        }
        P[i] = LU(std::move(Mi)).solve(rhs);
        if (i == 1) break;
    }

    // Robin row: w_j (-3 A0 + 4 A1 - A2)/(2h) + (n/2) sinh(xi2) A0 = -alpha sigma A0
    Matrix B = P[2] * P[1];
    for (std::size_t r = 0; r < K; ++r)
        for (std::size_t c = 0; c < K; ++c) {
            double v = -B(r, c) + 4.0 * P[1](r, c);
            if (r == c) v -= 3.0;
            B(r, c) = v / (2.0 * f.h_xi);
        }
    const double sh = 0.5 * g.n * std::sinh(g.xi2);
    Matrix G(K, K);
    for (std::size_t r = 0; r < K; ++r) {
        const double w = std::cosh(g.xi2) - std::cos(f.h_th * static_cast<double>(r));
        for (std::size_t c = 0; c < K; ++c)
            G(r, c) = -(w * B(r, c) + (r == c ? sh : 0.0)) / g.alpha;
    }

    detail::smallest_dense_eigenpair(G, f.sigma, f.boundary, f.iterations, f.residual);

    // sign-fix and scale the boundary trace to max 1
    double big = 0.0;
    for (double v : f.boundary)
        if (std::abs(v) > std::abs(big)) big = v;
    for (double& v : f.boundary) v /= big;

    // reconstruct the interior grid from the stored blocks
    f.grid.assign((N_xi + 1) * K, 0.0);
    std::vector<double> prev = f.boundary;
    for (std::size_t j = 0; j < K; ++j) f.grid[j] = prev[j];
    for (std::size_t i = 1; i <= N_xi - 1; ++i) {
        std::vector<double> cur(K, 0.0);
        const Matrix& Pi = P[i];
        for (std::size_t r = 0; r < K; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < K; ++c) s += Pi(r, c) * prev[c];
            cur[r] = s;
        }
        for (std::size_t j = 0; j < K; ++j) f.grid[i * K + j] = cur[j];
        prev = std::move(cur);
    }
    return f;
}

// Second-order Richardson extrapolation from grids h and h/2.
inline double richardson(double sigma_coarse, double sigma_fine) {
    return (4.0 * sigma_fine - sigma_coarse) / 3.0;
}

struct OracleComparison {
    double spectral = 0;
    double fd_coarse = 0, fd_fine = 0, fd_richardson = 0;
    std::size_t N_xi = 0, N_th = 0;  // coarse grid; fine grid doubles both
    double rel_diff = 0;             // |spectral - richardson| / |richardson|
    double tolerance = 0;
    bool pass = false;
};

inline OracleComparison compare(double spectral_sigma, const FdSolution& coarse,
                                const FdSolution& fine, double tolerance) {
    OracleComparison c;
    c.spectral = spectral_sigma;
    c.fd_coarse = coarse.sigma;
    c.fd_fine = fine.sigma;
    c.fd_richardson = richardson(coarse.sigma, fine.sigma);
    c.N_xi = coarse.N_xi;
    c.N_th = coarse.N_th;
    c.rel_diff = std::abs(spectral_sigma - c.fd_richardson) / std::abs(c.fd_richardson);
    c.tolerance = tolerance;
    c.pass = c.rel_diff <= tolerance;
    return c;
}

}  // namespace steklov
