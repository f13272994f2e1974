// eigenfield.hpp -- evaluation, normalisation and residuals of the eigenfunction
// SPDX-License-Identifier: MIT
//
// The solved series is evaluated in the rescaled form
//   u(xi, theta) = nu (cosh xi - cos theta)^(n/2)
//       sum_m Ctilde_m E_m(xi) G_m^(n/2)(cos theta),
//   E_m(xi) = (e^(-(m+n/2)(xi - xi2)) - e^(-(m+n/2)(2 xi1 - xi - xi2)))
//             / (1 - e^(-2 (m+n/2)(xi1 - xi2))),
// whose exponents are all <= 0 on [xi2, xi1]: no overflow at any truncation
// order, E_m(xi2) = 1, and E_m(xi1) = 0 to the last bit.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "steklov/errors.hpp"
#include "steklov/gegenbauer.hpp"
#include "steklov/geometry.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

struct EigenField {
    AnnulusGeometry geom;
    SpectralSolution sol;
    double nu = 1.0;  // boundary L2 normalisation factor; 1 until normalize()
};

inline EigenField make_eigenfield(const AnnulusGeometry& g, SpectralSolution sol) {
    EigenField f;
    f.geom = g;
    f.sol = std::move(sol);
    return f;
}

namespace detail {

// E_m factors for all m at fixed xi; g1 = xi - xi2 and the complementary
// exponent are formed so that both collapse to the same float at xi = xi1.
inline void radial_factors(const EigenField& f, double xi, std::vector<double>& E) {
    const double g1 = xi - f.geom.xi2;
    const double gtop = f.geom.xi1 - xi;
    const double gap = f.geom.xi1 - f.geom.xi2;
    E.resize(f.sol.M);
    for (std::size_t m = 0; m < f.sol.M; ++m) {
        const double beta = static_cast<double>(m) + 0.5 * f.geom.n;
        E[m] = std::exp(-beta * g1) * std::expm1(-2.0 * beta * gtop) /
               std::expm1(-2.0 * beta * gap);
    }
}

}  // namespace detail

inline double evaluate(const EigenField& f, double xi, double theta) {
    const double slack = 1e-12 * (f.geom.xi1 - f.geom.xi2);
    if (!(xi >= f.geom.xi2 - slack && xi <= f.geom.xi1 + slack))
        throw OutsideAnnulus("evaluate: xi outside [xi2, xi1]");
    xi = std::clamp(xi, f.geom.xi2, f.geom.xi1);
    const double s = std::cos(theta);
    const std::vector<double> G =
        gegenbauer_sequence(0.5 * f.geom.n, static_cast<int>(f.sol.M) - 1, s);
    std::vector<double> E;
    detail::radial_factors(f, xi, E);
    double sum = 0.0;
    for (std::size_t m = 0; m < f.sol.M; ++m) sum += f.sol.coeff[m] * E[m] * G[m];
    const double w = std::cosh(xi) - s;
    return f.nu * std::pow(w, 0.5 * f.geom.n) * sum;
}

inline double evaluate(const EigenField& f, const BisphericalPoint& p) {
    return evaluate(f, p.xi, p.theta);
}

// Outward normal derivative on the outer sphere { xi = xi2 } (the normal
// points out of the annulus, i.e. towards decreasing xi):
//   du/dn = -nu w^(n/2) / alpha *
//       sum_m [ (n sinh(xi2)/2) - w (m + n/2) c_m^2 ] Ctilde_m G_m(cos theta),
// with w = cosh xi2 - cos theta.
inline double normal_derivative_outer(const EigenField& f, double theta) {
    const double s = std::cos(theta);
    const double w = std::cosh(f.geom.xi2) - s;
    const double sh = std::sinh(f.geom.xi2);
    const double gap = f.geom.xi1 - f.geom.xi2;
    const std::vector<double> G =
        gegenbauer_sequence(0.5 * f.geom.n, static_cast<int>(f.sol.M) - 1, s);
    double sum = 0.0;
    for (std::size_t m = 0; m < f.sol.M; ++m) {
        const double beta = static_cast<double>(m) + 0.5 * f.geom.n;
        const double c_sq = coth_pos(beta * gap);
        sum += (0.5 * f.geom.n * sh - w * beta * c_sq) * f.sol.coeff[m] * G[m];
    }
    return -f.nu * std::pow(w, 0.5 * f.geom.n) / f.geom.alpha * sum;
}

// Boundary L2 normalisation: solves for nu so that the trace on the outer
// sphere has int u^2 dS = 1. The phi directions integrate to the area of the
// unit n-sphere, leaving
//   int u^2 dS = omega_n alpha^(n+1)
//       int_0^pi u(xi2, th)^2 sin^n(th) / (cosh xi2 - cos th)^(n+1) dth.
// Gauss-Legendre in theta with node doubling from 64 until two consecutive
// levels agree to 1e-8 (relative).
inline double normalize(EigenField& f) {
    f.nu = 1.0;
    const double xi2 = f.geom.xi2;
    const auto integrand = [&](double th) {
        const double u = evaluate(f, xi2, th);
        const double w = std::cosh(xi2) - std::cos(th);
        return u * u * std::pow(std::sin(th), f.geom.n) / std::pow(w, f.geom.n + 1);
    };
    double prev = 0.0;
    bool have_prev = false;
    double integral = 0.0;
    for (std::size_t nodes = 64; nodes <= 65536; nodes *= 2) {
        const QuadratureRule rule = gauss_legendre(nodes);
        integral = integrate(rule, 0.0, M_PI, integrand);
        if (have_prev && std::abs(integral - prev) <= 1e-8 * std::abs(integral)) {
            const double total = unit_sphere_area(f.geom.n) *
                                 std::pow(f.geom.alpha, f.geom.n + 1) * integral;
            if (!(total > 0.0)) throw QuadratureFail("normalize: nonpositive norm");
            f.nu = 1.0 / std::sqrt(total);
            return total;
        }
        prev = integral;
        have_prev = true;
    }
    throw QuadratureFail("normalize: boundary quadrature did not stabilise at 1e-8");
}

// Max-norm residual of the separated interior equation
//   A_xixi + A_thth + n cot(theta) A_th - (n^2/4) A = 0,
// where A = u / (cosh xi - cos theta)^(n/2), measured with second-order
// central differences on an (N_xi+1) x (N_th+1) grid and scaled by max |A|.
// At the rows next to theta = 0, pi the cot term is replaced by its pole
// limit n A_thth, which keeps the truncation error O(h^2) there.
inline double pde_residual(const EigenField& f, std::size_t N_xi, std::size_t N_th) {
    if (N_xi < 8 || N_th < 8) throw BadGrid("pde_residual: need at least 8 intervals");
    const double hxi = (f.geom.xi1 - f.geom.xi2) / static_cast<double>(N_xi);
    const double hth = M_PI / static_cast<double>(N_th);
    // A on the closed grid
    std::vector<double> A((N_xi + 1) * (N_th + 1));
    std::vector<double> E;
    const double lambda = 0.5 * f.geom.n;
    for (std::size_t j = 0; j <= N_th; ++j) {
        const double s = std::cos(hth * static_cast<double>(j));
        const std::vector<double> G =
            gegenbauer_sequence(lambda, static_cast<int>(f.sol.M) - 1, s);
        for (std::size_t i = 0; i <= N_xi; ++i) {
            const double xi = f.geom.xi2 + hxi * static_cast<double>(i);
            detail::radial_factors(f, xi, E);
            double sum = 0.0;
            for (std::size_t m = 0; m < f.sol.M; ++m) sum += f.sol.coeff[m] * E[m] * G[m];
            A[i * (N_th + 1) + j] = f.nu * sum;
        }
    }
    double amax = 0.0;
    for (double a : A) amax = std::max(amax, std::abs(a));
    const auto at = [&](std::size_t i, std::size_t j) { return A[i * (N_th + 1) + j]; };
    double worst = 0.0;
    for (std::size_t i = 1; i < N_xi; ++i) {
        for (std::size_t j = 1; j < N_th; ++j) {
            const double th = hth * static_cast<double>(j);
            const double axx = (at(i - 1, j) - 2.0 * at(i, j) + at(i + 1, j)) / (hxi * hxi);
            const double att = (at(i, j - 1) - 2.0 * at(i, j) + at(i, j + 1)) / (hth * hth);
            double angular;
            if (j == 1 || j + 1 == N_th) {
                angular = (1.0 + f.geom.n) * att;  // pole rule
            } else {
                const double ath = (at(i, j + 1) - at(i, j - 1)) / (2.0 * hth);
                angular = att + f.geom.n * (std::cos(th) / std::sin(th)) * ath;
            }
            const double res = axx + angular - 0.25 * f.geom.n * f.geom.n * at(i, j);
            worst = std::max(worst, std::abs(res));
        }
    }
    return worst / amax;
}

// Largest |u| on the inner sphere over a theta grid, scaled by the largest
// boundary trace value; exact zero up to rounding of the radial factors.
inline double dirichlet_residual(const EigenField& f, std::size_t nth = 100) {
    double worst = 0.0, scale = 0.0;
    for (std::size_t k = 0; k <= nth; ++k) {
        const double th = M_PI * static_cast<double>(k) / static_cast<double>(nth);
        worst = std::max(worst, std::abs(evaluate(f, f.geom.xi1, th)));
        scale = std::max(scale, std::abs(evaluate(f, f.geom.xi2, th)));
    }
    return worst / scale;
}

// Relative defect of the Steklov condition du/dn = sigma u on the outer sphere.
inline double steklov_residual(const EigenField& f, std::size_t nth = 100) {
    double worst = 0.0, scale = 0.0;
    for (std::size_t k = 0; k <= nth; ++k) {
        const double th = M_PI * static_cast<double>(k) / static_cast<double>(nth);
        const double u = evaluate(f, f.geom.xi2, th);
        const double dn = normal_derivative_outer(f, th);
        worst = std::max(worst, std::abs(dn - f.sol.sigma * u));
        scale = std::max(scale, std::abs(f.sol.sigma * u));
    }
    return worst / scale;
}

}  // namespace steklov
