// geometry.hpp -- eccentric spherical annulus and its bispherical chart
// SPDX-License-Identifier: MIT
//
// The domain is the region between two spheres in R^(n+2): an outer sphere of
// radius r2 and an inner sphere of radius r1 whose centre is offset by
// 0 < t < r2 - r1 along the x1 axis. Both spheres are level sets of the
// bispherical coordinate xi:
//
//   x1 = alpha sinh(xi) / (cosh(xi) - cos(theta)),
//   rho = alpha sin(theta) / (cosh(xi) - cos(theta)),   rho = |(x2, ..., x_{n+2})|,
//
// with the transverse block rho split over the usual spherical angles
// phi_1, ..., phi_n. The annulus is exactly { xi2 < xi < xi1 }, 0 < xi2 < xi1.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

struct AnnulusGeometry {
    int n = 1;          // ambient dimension is n + 2
    double r1 = 0.0;    // inner radius
    double r2 = 0.0;    // outer radius
    double t = 0.0;     // centre offset, 0 < t < r2 - r1
    double eps = 0.0;   // r2 - r1 - t, the closest-approach width
    double alpha = 0.0; // half focal distance of the bispherical chart
    double xi1 = 0.0;   // inner sphere level, asinh(alpha / r1)
    double xi2 = 0.0;   // outer sphere level, asinh(alpha / r2)
    double r_star = 0.0; // sqrt(2 r1 r2 / (r2 - r1)): alpha ~ r_star sqrt(eps)
};

struct BisphericalPoint {
    double xi = 0.0;
    double theta = 0.0;            // in [0, pi]
    std::vector<double> phi;       // n angles; first n-1 in [0, pi], last in [0, 2 pi)
    double h = 0.0;                // metric scale factor alpha / (cosh xi - cos theta)
};

// Scale factor of the chart; g_11 = g_22 = h^2.
inline double scale_factor(const AnnulusGeometry& g, double xi, double theta) {
    return g.alpha / (std::cosh(xi) - std::cos(theta));
}

// Centre (on the x1 axis) of the sphere { xi = xi0 }; its radius is alpha / sinh(xi0).
// In particular the normalised placement of the annulus puts the outer centre at
// t0 = alpha * coth(xi2) = sqrt(alpha^2 + r2^2) and the inner at t0 - t.
inline double sphere_center_x1(const AnnulusGeometry& g, double xi0) {
    return g.alpha / std::tanh(xi0);
}

inline AnnulusGeometry build_geometry(int n, double r1, double r2, double t) {
    if (n < 1) throw BadRadii("build_geometry: need n >= 1");
    if (!(std::isfinite(r1) && std::isfinite(r2) && std::isfinite(t)))
        throw BadRadii("build_geometry: radii and offset must be finite");
    if (!(r1 > 0.0 && r2 > r1)) throw BadRadii("build_geometry: need 0 < r1 < r2");
    if (t == 0.0)
        throw DegenerateConcentric(
            "build_geometry: t = 0 is concentric; the bispherical chart degenerates "
            "(use the concentric closed form)");
    if (!(t > 0.0) || t >= r2 - r1)
        throw Overlap("build_geometry: need 0 < t < r2 - r1 (inner sphere strictly inside)");

    AnnulusGeometry g;
    g.n = n;
    g.r1 = r1;
    g.r2 = r2;
    g.t = t;
    g.eps = r2 - r1 - t;
    // alpha = sqrt(((r2+r1)^2 - t^2)((r2-r1)^2 - t^2)) / (2t), evaluated in the
    // factored form so the eps -> 0 cancellation never happens in a subtraction.
    g.alpha = std::sqrt((r2 + r1 - t) * (r2 + r1 + t) * g.eps * (r2 - r1 + t)) / (2.0 * t);
    g.xi1 = std::asinh(g.alpha / r1);
    g.xi2 = std::asinh(g.alpha / r2);
    g.r_star = std::sqrt(2.0 * r1 * r2 / (r2 - r1));
    return g;
}

// Assemble a point of the chart; validates angle counts and ranges and fills h.
inline BisphericalPoint make_point(const AnnulusGeometry& g, double xi, double theta,
                                   std::vector<double> phi) {
    if (!(theta >= 0.0 && theta <= M_PI))
        throw OutOfRange("make_point: need theta in [0, pi]");
    if (phi.size() != static_cast<std::size_t>(g.n))
        throw OutOfRange("make_point: expected " + std::to_string(g.n) + " sphere angles");
    for (std::size_t k = 0; k + 1 < phi.size(); ++k)
        if (!(phi[k] >= 0.0 && phi[k] <= M_PI))
            throw OutOfRange("make_point: need phi_k in [0, pi] for k < n");
    if (!(phi.back() >= 0.0 && phi.back() < 2.0 * M_PI))
        throw OutOfRange("make_point: need phi_n in [0, 2 pi)");
    BisphericalPoint p;
    p.xi = xi;
    p.theta = theta;
    p.phi = std::move(phi);
    p.h = scale_factor(g, xi, theta);
    return p;
}

inline std::vector<double> to_cartesian(const AnnulusGeometry& g, const BisphericalPoint& p) {
    if (p.phi.size() != static_cast<std::size_t>(g.n))
        throw OutOfRange("to_cartesian: point has wrong number of sphere angles");
    const double denom = std::cosh(p.xi) - std::cos(p.theta);
    std::vector<double> x(static_cast<std::size_t>(g.n) + 2);
    x[0] = g.alpha * std::sinh(p.xi) / denom;
    // transverse block: radius rho spread over the sphere angles
    double rad = g.alpha * std::sin(p.theta) / denom;
    for (int k = 0; k < g.n; ++k) {
        x[static_cast<std::size_t>(k) + 1] = rad * std::cos(p.phi[static_cast<std::size_t>(k)]);
        rad *= std::sin(p.phi[static_cast<std::size_t>(k)]);
    }
    x[static_cast<std::size_t>(g.n) + 1] = rad;
    return x;
}

// Inverse chart. The (x1, rho) half-plane problem has the closed form
//   xi + i theta' = log((z + alpha)/(z - alpha)),  z = x1 + i rho,
// evaluated as one log and one atan2; no iteration. Points within
// 1e-13 * alpha of a focus (+-alpha, 0, ..., 0) are rejected.
inline BisphericalPoint from_cartesian(const AnnulusGeometry& g, const std::vector<double>& x) {
    if (x.size() != static_cast<std::size_t>(g.n) + 2)
        throw OutOfRange("from_cartesian: expected a point of R^(n+2)");
    double rho_sq = 0.0;
    for (std::size_t k = 1; k < x.size(); ++k) rho_sq += x[k] * x[k];
    const double rho = std::sqrt(rho_sq);

    const double tol = 1e-13 * g.alpha;
    const double dplus = std::hypot(x[0] - g.alpha, rho);
    const double dminus = std::hypot(x[0] + g.alpha, rho);
    if (dplus < tol || dminus < tol)
        throw PoleSingular("from_cartesian: point too close to a focus of the chart");

    BisphericalPoint p;
    p.xi = 0.5 * std::log(((x[0] + g.alpha) * (x[0] + g.alpha) + rho_sq) /
                          ((x[0] - g.alpha) * (x[0] - g.alpha) + rho_sq));
    p.theta = std::atan2(2.0 * g.alpha * rho, x[0] * x[0] + rho_sq - g.alpha * g.alpha);
    // sphere angles of the transverse block (x2, ..., x_{n+2})
    p.phi.resize(static_cast<std::size_t>(g.n), 0.0);
    double tail_sq = rho_sq;
    for (int k = 0; k < g.n - 1; ++k) {
        const double lead = x[static_cast<std::size_t>(k) + 1];
        tail_sq = std::max(tail_sq - lead * lead, 0.0);
        p.phi[static_cast<std::size_t>(k)] = std::atan2(std::sqrt(tail_sq), lead);
    }
    if (g.n >= 1) {
        const double a = x[static_cast<std::size_t>(g.n)];      // x_{n+1}
        const double b = x[static_cast<std::size_t>(g.n) + 1];  // x_{n+2}
        double last = std::atan2(b, a);
        if (last < 0.0) last += 2.0 * M_PI;
        if (a == 0.0 && b == 0.0) last = 0.0;
        p.phi[static_cast<std::size_t>(g.n) - 1] = last;
    }
    p.h = scale_factor(g, p.xi, p.theta);
    return p;
}

// sqrt(det g) of the chart:
//   alpha^(n+2) sin^n(theta) prod_{k=1}^{n-1} sin^(n-k)(phi_k) / (cosh xi - cos theta)^(n+2).
inline double volume_weight(const AnnulusGeometry& g, const BisphericalPoint& p) {
    if (p.phi.size() != static_cast<std::size_t>(g.n))
        throw OutOfRange("volume_weight: point has wrong number of sphere angles");
    const double denom = std::cosh(p.xi) - std::cos(p.theta);
    double w = std::pow(g.alpha / denom, g.n + 2) * std::pow(std::sin(p.theta), g.n);
    for (int k = 1; k <= g.n - 1; ++k)
        w *= std::pow(std::sin(p.phi[static_cast<std::size_t>(k) - 1]), g.n - k);
    return w;
}

// Surface area of the unit n-sphere, omega_n = 2 pi^((n+1)/2) / Gamma((n+1)/2).
inline double unit_sphere_area(int n) {
    if (n < 0) throw BadRadii("unit_sphere_area: need n >= 0");
    return 2.0 * std::exp(0.5 * (n + 1.0) * std::log(M_PI) - std::lgamma(0.5 * (n + 1.0)));
}

}  // namespace steklov
