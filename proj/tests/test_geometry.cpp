// Bispherical chart of the eccentric annulus: frozen geometry constants, the
// coordinate-sphere identities, chart round trips, the volume integral, and
// the rejection of impossible configurations.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/quadrature.hpp"

using namespace steklov;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("frozen chart constants for (n=1, r1=1, r2=2, t=0.5)") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    // alpha = sqrt(105)/4 for this configuration
    REQUIRE(g.alpha == Catch::Approx(2.5617376914898995958).epsilon(1e-15));
    REQUIRE(g.alpha == Catch::Approx(std::sqrt(105.0) / 4.0).epsilon(1e-15));
    REQUIRE(g.xi1 == Catch::Approx(1.6699190305877699868).epsilon(1e-15));
    REQUIRE(g.xi2 == Catch::Approx(1.0667324319014355736).epsilon(1e-15));
    REQUIRE(g.eps == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(g.xi2 > 0.0);
    REQUIRE(g.xi1 > g.xi2);
}

TEST_CASE("coordinate spheres recover the balls") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    // xi = xi_j is a sphere of radius alpha/sinh(xi_j) centred at
    // alpha coth(xi_j) on the x1 axis; for this chart the exact values are
    // rational: centres 13/4 and 11/4, radii 2 and 1.
    REQUIRE(g.alpha / std::sinh(g.xi2) == Catch::Approx(2.0).epsilon(1e-14));
    REQUIRE(g.alpha / std::sinh(g.xi1) == Catch::Approx(1.0).epsilon(1e-14));
    REQUIRE(sphere_center_x1(g, g.xi2) == Catch::Approx(3.25).epsilon(1e-14));
    REQUIRE(sphere_center_x1(g, g.xi1) == Catch::Approx(2.75).epsilon(1e-14));
    // centre distance equals the prescribed offset t
    REQUIRE(sphere_center_x1(g, g.xi2) - sphere_center_x1(g, g.xi1) ==
            Catch::Approx(g.t).epsilon(1e-13));
}

TEST_CASE("centre identity holds across parameters") {
    for (int n : {1, 2, 3}) {
        for (double t : {0.05, 0.3, 0.7, 0.95}) {
            const AnnulusGeometry g = build_geometry(n, 1.0, 2.0, t);
            const double a = g.alpha;
            REQUIRE(std::sqrt(a * a + 4.0) - std::sqrt(a * a + 1.0) ==
                    Catch::Approx(t).epsilon(1e-12));
            REQUIRE(g.alpha / std::sinh(g.xi1) == Catch::Approx(1.0).epsilon(1e-12));
            REQUIRE(g.alpha / std::sinh(g.xi2) == Catch::Approx(2.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("alpha scales like sqrt(eps) toward touching") {
    // alpha ~ r_* sqrt(eps) with r_* = sqrt(2 r1 r2 / (r2 - r1))
    REQUIRE(build_geometry(1, 1.0, 2.0, 0.5).r_star == Catch::Approx(2.0).epsilon(1e-15));
    REQUIRE(build_geometry(2, 1.0, 1.5, 0.1).r_star ==
            Catch::Approx(2.449489742783178098197284).epsilon(1e-15));
    std::vector<double> ratio;
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 1.0 - eps);
        ratio.push_back(g.alpha / (g.r_star * std::sqrt(eps)));
    }
    REQUIRE(ratio[0] == Catch::Approx(1.0).margin(2e-2));
    REQUIRE(ratio[1] == Catch::Approx(1.0).margin(2e-4));
    REQUIRE(ratio[2] == Catch::Approx(1.0).margin(2e-6));
}

TEST_CASE("frozen cartesian images") {
    {
        const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
        const BisphericalPoint p = make_point(g, 1.2, 0.9, {0.6});
        const std::vector<double> x = to_cartesian(g, p);
        REQUIRE(x.size() == 3);
        REQUIRE(x[0] == Catch::Approx(3.2520569867835027151).epsilon(1e-14));
        REQUIRE(x[1] == Catch::Approx(1.3928674219446120904).epsilon(1e-14));
        REQUIRE(x[2] == Catch::Approx(0.9529118724923081651).epsilon(1e-14));
        REQUIRE(p.h == Catch::Approx(2.1544486548948434679).epsilon(1e-14));
    }
    {
        const AnnulusGeometry g = build_geometry(2, 1.0, 2.0, 0.5);
        const BisphericalPoint p = make_point(g, 1.1, 2.2, {1.3, 5.1});
        const std::vector<double> x = to_cartesian(g, p);
        REQUIRE(x.size() == 4);
        REQUIRE(x[0] == Catch::Approx(1.5159719299772955969).epsilon(1e-14));
        REQUIRE(x[1] == Catch::Approx(0.2454704908945266131).epsilon(1e-14));
        REQUIRE(x[2] == Catch::Approx(0.3342116455140647199).epsilon(1e-14));
        REQUIRE(x[3] == Catch::Approx(-0.8186144670872611900).epsilon(1e-14));
    }
}

TEST_CASE("round trip through the chart") {
    for (int n : {1, 2, 3}) {
        const AnnulusGeometry g = build_geometry(n, 1.0, 2.0, 0.45);
        for (double xi : {g.xi2 + 1e-4, 0.5 * (g.xi1 + g.xi2), g.xi1 - 1e-4}) {
            for (double theta : {0.05, 1.1, 2.3, kPi - 0.05}) {
                std::vector<double> phi(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k)
                    phi[static_cast<std::size_t>(k)] = 0.4 + 0.7 * k;
                const BisphericalPoint p = make_point(g, xi, theta, phi);
                const std::vector<double> x = to_cartesian(g, p);
                const BisphericalPoint q = from_cartesian(g, x);
                REQUIRE(q.xi == Catch::Approx(xi).epsilon(1e-12));
                REQUIRE(q.theta == Catch::Approx(theta).epsilon(1e-12));
                for (int k = 0; k < n; ++k)
                    REQUIRE(q.phi[static_cast<std::size_t>(k)] ==
                            Catch::Approx(phi[static_cast<std::size_t>(k)])
                                .epsilon(1e-12)
                                .margin(1e-12));
            }
        }
    }
}

TEST_CASE("boundary spheres are level sets of xi") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    const double cx = sphere_center_x1(g, g.xi2);  // outer sphere centre, radius 2
    for (int k = 1; k < 12; ++k) {
        const double a = k * (kPi / 12.0);
        const std::vector<double> x = {cx + 2.0 * std::cos(a), 2.0 * std::sin(a), 0.0};
        const BisphericalPoint p = from_cartesian(g, x);
        REQUIRE(p.xi == Catch::Approx(g.xi2).margin(1e-10));
    }
    const double cx1 = sphere_center_x1(g, g.xi1);  // inner sphere centre, radius 1
    for (int k = 1; k < 12; ++k) {
        const double a = k * (kPi / 12.0);
        const std::vector<double> x = {cx1 + std::cos(a), std::sin(a), 0.0};
        const BisphericalPoint p = from_cartesian(g, x);
        REQUIRE(p.xi == Catch::Approx(g.xi1).margin(1e-10));
    }
}

TEST_CASE("volume integral of the chart weight matches the shell volume") {
    // With every phi_k = pi/2 the weight's angular product is 1, and the
    // remaining phi integral contributes exactly omega_n, so
    //   omega_n int int alpha^(n+2) sin^n(theta)/(cosh xi - cos theta)^(n+2)
    // over (xi2, xi1) x (0, pi) is the volume between the balls.
    const QuadratureRule rule = gauss_legendre(160);
    const auto shell = [&rule](const AnnulusGeometry& g) {
        const std::vector<double> phi(static_cast<std::size_t>(g.n), kPi / 2.0);
        return unit_sphere_area(g.n) *
               integrate(rule, g.xi2, g.xi1, [&](double xi) {
                   return integrate(rule, 0.0, kPi, [&](double th) {
                       return volume_weight(g, make_point(g, xi, th, phi));
                   });
               });
    };
    // R^3: (4 pi / 3)(r2^3 - r1^3); R^4: (pi^2 / 2)(r2^4 - r1^4)
    REQUIRE(shell(build_geometry(1, 1.0, 2.0, 0.5)) ==
            Catch::Approx(4.0 * kPi / 3.0 * 7.0).epsilon(1e-8));
    REQUIRE(shell(build_geometry(2, 1.0, 2.0, 0.7)) ==
            Catch::Approx(kPi * kPi / 2.0 * 15.0).epsilon(1e-8));
}

TEST_CASE("unit sphere areas") {
    REQUIRE(unit_sphere_area(1) == Catch::Approx(2.0 * kPi).epsilon(1e-15));
    REQUIRE(unit_sphere_area(2) == Catch::Approx(4.0 * kPi).epsilon(1e-15));
    REQUIRE(unit_sphere_area(3) == Catch::Approx(2.0 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("scale factor matches its definition") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    for (double xi : {g.xi2, 1.3, g.xi1}) {
        for (double theta : {0.2, 1.7, 3.0}) {
            REQUIRE(scale_factor(g, xi, theta) ==
                    Catch::Approx(g.alpha / (std::cosh(xi) - std::cos(theta)))
                        .epsilon(1e-14));
        }
    }
}

TEST_CASE("impossible configurations are rejected") {
    REQUIRE_THROWS_AS(build_geometry(1, 2.0, 1.0, 0.1), BadRadii);
    REQUIRE_THROWS_AS(build_geometry(1, -1.0, 2.0, 0.1), BadRadii);
    REQUIRE_THROWS_AS(build_geometry(1, 1.0, 1.0, 0.1), BadRadii);
    REQUIRE_THROWS_AS(build_geometry(0, 1.0, 2.0, 0.1), BadRadii);
    REQUIRE_THROWS_AS(build_geometry(1, 1.0, 2.0, 0.0), DegenerateConcentric);
    REQUIRE_THROWS_AS(build_geometry(1, 1.0, 2.0, 1.0), Overlap);    // internally tangent
    REQUIRE_THROWS_AS(build_geometry(1, 1.0, 2.0, 1.5), Overlap);    // crossing
    REQUIRE_THROWS_AS(build_geometry(1, 1.0, 2.0, -0.5), Overlap);   // negative offset
}

TEST_CASE("axis points reject the angular chart") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    // a point on the x1 axis between the foci has rho = 0 and no phi chart
    REQUIRE_THROWS_AS(from_cartesian(g, {g.alpha, 0.0, 0.0}), PoleSingular);
}

TEST_CASE("make_point validates the angle count") {
    const AnnulusGeometry g = build_geometry(2, 1.0, 2.0, 0.5);
    REQUIRE_THROWS_AS(make_point(g, 1.2, 0.9, {0.6}), OutOfRange);
    REQUIRE_NOTHROW(make_point(g, 1.2, 0.9, {0.6, 0.7}));
}
