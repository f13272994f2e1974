// spectral.hpp -- first Steklov-Dirichlet eigenvalue via the separated series
// SPDX-License-Identifier: MIT
//
// In bispherical coordinates the harmonic ansatz
//   u = (cosh xi - cos theta)^(n/2) sum_m C_m (e^((m+n/2)(2 xi1 - xi)) - e^((m+n/2) xi))
//         * G_m^(n/2)(cos theta)
// vanishes on the inner sphere by construction. Matching the Steklov condition
// on the outer sphere couples neighbouring Gegenbauer modes through cos(theta)
// and yields a three-term recursion for the boundary coefficients
//   Ctilde_m = C_m (e^((m+n/2)(2 xi1 - xi2)) - e^((m+n/2) xi2)):
//
//   (-2 alpha sigma - n sinh xi2 + (2m+n) c_m^2 cosh xi2) Ctilde_m
//       - m c_{m-1}^2 Ctilde_{m-1} - (m+n) c_{m+1}^2 Ctilde_{m+1} = 0,
//
// with c_m^2 = coth((m + n/2)(xi1 - xi2)) and Ctilde_{-1} == 0 (the printed
// m = 0 row is this generic row specialised to m = 0). Truncated at order M
// this is an unsymmetric Jacobi eigenproblem A Ctilde = (2 alpha sigma) Ctilde;
// sigma_1 is the smallest eigenvalue and its eigenvector is one-signed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "steklov/errors.hpp"
#include "steklov/geometry.hpp"
#include "steklov/tridiagonal.hpp"

namespace steklov {

// coth(x) for x > 0 without overflow; tends to 1 from above.
inline double coth_pos(double x) {
    const double e = std::exp(-2.0 * x);
    return (1.0 + e) / (1.0 - e);
}

struct JacobiOperator {
    int n = 1;
    double alpha = 0.0, xi1 = 0.0, xi2 = 0.0;
    std::size_t M = 0;
    std::vector<double> diag;  // size M: -n sinh(xi2) + (2m+n) c_m^2 cosh(xi2)
    std::vector<double> sub;   // size M: sub[m] = -m c_{m-1}^2 (sub[0] = 0)
    std::vector<double> sup;   // size M: sup[m] = -(m+n) c_{m+1}^2 (sup[M-1] = 0)
    std::vector<double> c_sq;  // size M: coth((m + n/2)(xi1 - xi2))
};

inline JacobiOperator assemble(const AnnulusGeometry& g, std::size_t M) {
    if (M < 8) throw TruncationTooSmall("assemble: need M >= 8");
    JacobiOperator J;
    J.n = g.n;
    J.alpha = g.alpha;
    J.xi1 = g.xi1;
    J.xi2 = g.xi2;
    J.M = M;
    const double gap = g.xi1 - g.xi2;
    const double ch = std::cosh(g.xi2);
    const double sh = std::sinh(g.xi2);
    J.c_sq.resize(M);
    J.diag.resize(M);
    J.sub.resize(M);
    J.sup.resize(M);
    for (std::size_t m = 0; m < M; ++m)
        J.c_sq[m] = coth_pos((static_cast<double>(m) + 0.5 * g.n) * gap);
    for (std::size_t m = 0; m < M; ++m) {
        const double md = static_cast<double>(m);
        J.diag[m] = -g.n * sh + (2.0 * md + g.n) * J.c_sq[m] * ch;
        J.sub[m] = m == 0 ? 0.0 : -md * J.c_sq[m - 1];
        J.sup[m] = m + 1 < M ? -(md + g.n) * J.c_sq[m + 1] : 0.0;
    }
    return J;
}

// Symmetrising similarity: with d_0 = 1 and
//   d_{m+1}/d_m = (c_{m+1}/c_m) sqrt((m+n)/(m+1)),
// D A D^{-1} is symmetric with off-diagonal
//   b_m = -sqrt((m+1)(m+n)) c_m c_{m+1}.
inline SymTridiagonal symmetrize(const JacobiOperator& J, std::vector<double>* d_out = nullptr) {
    SymTridiagonal T;
    T.diag = J.diag;
    T.off.resize(J.M > 0 ? J.M - 1 : 0);
    std::vector<double> d(J.M, 1.0);
    for (std::size_t m = 0; m + 1 < J.M; ++m) {
        const double md = static_cast<double>(m);
        const double cm = std::sqrt(J.c_sq[m]);
        const double cm1 = std::sqrt(J.c_sq[m + 1]);
        T.off[m] = -std::sqrt((md + 1.0) * (md + J.n)) * cm * cm1;
        d[m + 1] = d[m] * (cm1 / cm) * std::sqrt((md + J.n) / (md + 1.0));
    }
    if (d_out) *d_out = std::move(d);
    return T;
}

// Smallest eigenvalue of the truncated operator and its coefficient vector,
// returned with ||Ctilde||_2 = 1 and Ctilde_0 > 0.
inline std::pair<double, std::vector<double>> smallest_eigenpair(const JacobiOperator& J) {
    std::vector<double> d;
    const SymTridiagonal T = symmetrize(J, &d);
    EigenPair p = smallest_eigenpair(T);
    std::vector<double> coeff(J.M);
    for (std::size_t m = 0; m < J.M; ++m) coeff[m] = p.vector[m] / d[m];
    double nrm = 0.0;
    for (double c : coeff) nrm += c * c;
    nrm = std::sqrt(nrm);
    for (double& c : coeff) c /= nrm;
    if (coeff[0] < 0.0)
        for (double& c : coeff) c = -c;
    return {p.value, std::move(coeff)};
}

struct SpectralSolution {
    int n = 1;
    double r1 = 0.0, r2 = 0.0, t = 0.0, eps = 0.0;
    double alpha = 0.0, xi1 = 0.0, xi2 = 0.0;
    std::size_t M = 0;           // accepted truncation order
    double sigma = 0.0;          // first Steklov-Dirichlet eigenvalue
    double lambda_min = 0.0;     // 2 alpha sigma
    std::vector<double> coeff;   // Ctilde_m, unit norm, coeff[0] > 0
    std::vector<double> c_raw;   // C_m; underflows to 0 once the scaling is subnormal
    double recursion_residual = 0.0;  // scaled max row residual, virtual row M included
    double tail_ratio = 0.0;          // |Ctilde_{M-1}| / max |Ctilde|
    double decay_rate = 0.0;          // fitted d log|Ctilde| / dm over the valid range
};

namespace detail {

// Max row residual of the recursion over rows 0..M (row M takes
// Ctilde_M := 0), scaled by ||A||_inf * max|Ctilde|.
inline double recursion_residual(const JacobiOperator& J, const std::vector<double>& coeff,
                                 double lambda) {
    double anorm = 0.0, cmax = 0.0, worst = 0.0;
    for (std::size_t m = 0; m < J.M; ++m) {
        anorm = std::max(anorm,
                         std::abs(J.diag[m]) + std::abs(J.sub[m]) + std::abs(J.sup[m]));
        cmax = std::max(cmax, std::abs(coeff[m]));
    }
    for (std::size_t m = 0; m < J.M; ++m) {
        double row = (J.diag[m] - lambda) * coeff[m];
        if (m > 0) row += J.sub[m] * coeff[m - 1];
        if (m + 1 < J.M) row += J.sup[m] * coeff[m + 1];
        worst = std::max(worst, std::abs(row));
    }
    // virtual row M of the untruncated recursion with Ctilde_M = 0
    const double gap = J.xi1 - J.xi2;
    const double c_sq_last = coth_pos((static_cast<double>(J.M) - 1.0 + 0.5 * J.n) * gap);
    worst = std::max(worst, static_cast<double>(J.M) * c_sq_last * std::abs(coeff[J.M - 1]));
    return worst / (anorm * cmax);
}

inline double fitted_decay_rate(const std::vector<double>& coeff) {
    double cmax = 0.0;
    for (double c : coeff) cmax = std::max(cmax, std::abs(c));
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * cmax;
    // least squares of log|coeff_m| against m over the trusted range
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t k = 0;
    for (std::size_t m = 0; m < coeff.size(); ++m) {
        if (std::abs(coeff[m]) <= floor) break;
        const double x = static_cast<double>(m);
        const double y = std::log(std::abs(coeff[m]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    if (k < 2) return 0.0;
    const double denom = k * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (k * sxy - sx * sy) / denom;
}

}  // namespace detail

// Solve for sigma_1 with adaptive truncation: start at
// M = max(32, ceil(8 / (xi1 - xi2))) and double until successive sigmas agree
// to tol (relative) and the coefficient tail has died below 1e-10.
inline SpectralSolution solve_sigma(const AnnulusGeometry& g, double tol = 1e-10) {
    const double gap = g.xi1 - g.xi2;
    if (gap < 1e-6)
        throw GapTooSmall("solve_sigma: xi1 - xi2 < 1e-6; truncation order would be untrustworthy");
    if (!(tol > 0.0)) throw Error("solve_sigma: need tol > 0");

    constexpr std::size_t M_CAP = std::size_t(1) << 16;
    std::size_t M = std::max<std::size_t>(32, static_cast<std::size_t>(std::ceil(8.0 / gap)));
    M = std::min(M, M_CAP);

    JacobiOperator J = assemble(g, M);
    auto [lambda, coeff] = smallest_eigenpair(J);
    for (;;) {
        if (M >= M_CAP)
            throw NoConvergence("solve_sigma: truncation cap reached without stabilising");
        const std::size_t M2 = std::min(M * 2, M_CAP);
        JacobiOperator J2 = assemble(g, M2);
        auto [lambda2, coeff2] = smallest_eigenpair(J2);
        const double s1 = lambda / (2.0 * g.alpha);
        const double s2 = lambda2 / (2.0 * g.alpha);
        double cmax = 0.0, anorm = 0.0;
        for (std::size_t m = 0; m < M2; ++m) {
            cmax = std::max(cmax, std::abs(coeff2[m]));
            anorm = std::max(anorm, std::abs(J2.diag[m]) + std::abs(J2.sub[m]) +
                                        std::abs(J2.sup[m]));
        }
        const double tail = std::abs(coeff2.back()) / cmax;
        // lambda carries an irreducible rounding floor of order eps ||A||;
        // below that, sigma(M) and sigma(2M) cannot be told apart.
        const double noise =
            64.0 * std::numeric_limits<double>::epsilon() * anorm / (2.0 * g.alpha);
        J = std::move(J2);
        lambda = lambda2;
        coeff = std::move(coeff2);
        M = M2;
        if (std::abs(s2 - s1) <= tol * std::abs(s2) + noise && tail < 1e-10) break;
    }

    SpectralSolution sol;
    sol.n = g.n;
    sol.r1 = g.r1;
    sol.r2 = g.r2;
    sol.t = g.t;
    sol.eps = g.eps;
    sol.alpha = g.alpha;
    sol.xi1 = g.xi1;
    sol.xi2 = g.xi2;
    sol.M = M;
    sol.lambda_min = lambda;
    sol.sigma = lambda / (2.0 * g.alpha);
    if (!(sol.sigma > 0.0))
        throw NoConvergence("solve_sigma: nonpositive sigma indicates a failed eigensolve");
    sol.recursion_residual = detail::recursion_residual(J, coeff, lambda);
    double cmax = 0.0;
    for (double c : coeff) cmax = std::max(cmax, std::abs(c));
    sol.tail_ratio = std::abs(coeff.back()) / cmax;
    sol.decay_rate = detail::fitted_decay_rate(coeff);
    // Recover the raw series coefficients C_m = Ctilde_m * e^(-(m+n/2)(2 xi1 - xi2))
    //   / (1 - e^(-2 (m+n/2)(xi1 - xi2))); harmless underflow to 0 for large m.
    sol.c_raw.resize(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double beta = static_cast<double>(m) + 0.5 * g.n;
        sol.c_raw[m] = coeff[m] * std::exp(-beta * (2.0 * g.xi1 - g.xi2)) /
                       (-std::expm1(-2.0 * beta * gap));
    }
    sol.coeff = std::move(coeff);
    return sol;
}

}  // namespace steklov
