// Eigenfunction evaluation: exact inner-boundary vanishing, boundary-trace
// normalisation, the Steklov and interior-equation defects, positivity of the
// ground state, and the analytic normal derivative against a finite-difference
// probe.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "steklov/eigenfield.hpp"
#include "steklov/geometry.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/spectral.hpp"

using namespace steklov;

namespace {

EigenField solved_field(int n, double r1, double r2, double t) {
    const AnnulusGeometry g = build_geometry(n, r1, r2, t);
    EigenField f = make_eigenfield(g, solve_sigma(g));
    normalize(f);
    return f;
}

}  // namespace

TEST_CASE("inner sphere trace vanishes to the last bit") {
    const EigenField f = solved_field(1, 1.0, 2.0, 0.5);
    for (int k = 0; k <= 16; ++k) {
        const double th = M_PI * k / 16.0;
        REQUIRE(evaluate(f, f.geom.xi1, th) == 0.0);
    }
}

TEST_CASE("boundary trace is L2-normalised") {
    for (int n : {1, 2}) {
        const EigenField f = solved_field(n, 1.0, 2.0, 0.5);
        const QuadratureRule rule = gauss_legendre(2048);
        const double integral = integrate(rule, 0.0, M_PI, [&](double th) {
            const double u = evaluate(f, f.geom.xi2, th);
            const double w = std::cosh(f.geom.xi2) - std::cos(th);
            return u * u * std::pow(std::sin(th), n) / std::pow(w, n + 1);
        });
        const double total =
            unit_sphere_area(n) * std::pow(f.geom.alpha, n + 1) * integral;
        REQUIRE(total == Catch::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("normalize reports the unnormalised boundary norm") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    EigenField f = make_eigenfield(g, solve_sigma(g));
    const double total = normalize(f);
    REQUIRE(total > 0.0);
    REQUIRE(f.nu == Catch::Approx(1.0 / std::sqrt(total)).epsilon(1e-14));
}

TEST_CASE("Steklov condition holds on the outer sphere") {
    for (int n : {1, 3}) {
        const EigenField f = solved_field(n, 1.0, 2.0, 0.5);
        REQUIRE(steklov_residual(f) <= 1e-6);
        REQUIRE(dirichlet_residual(f) == 0.0);
    }
}

TEST_CASE("normal derivative matches a one-sided difference probe") {
    // du/dn = -(cosh xi2 - cos th)/alpha * du/dxi at the outer sphere;
    // fourth-order one-sided stencil into the annulus
    for (int n : {1, 2}) {
        const EigenField f = solved_field(n, 1.0, 2.0, 0.5);
        const double delta = 1e-3 * (f.geom.xi1 - f.geom.xi2);
        double scale = 0.0;
        std::vector<double> analytic(9), probe(9);
        for (int k = 1; k <= 9; ++k) {
            const double th = M_PI * k / 10.0;
            const double u0 = evaluate(f, f.geom.xi2, th);
            const double u1 = evaluate(f, f.geom.xi2 + delta, th);
            const double u2 = evaluate(f, f.geom.xi2 + 2.0 * delta, th);
            const double u3 = evaluate(f, f.geom.xi2 + 3.0 * delta, th);
            const double u4 = evaluate(f, f.geom.xi2 + 4.0 * delta, th);
            const double du_dxi =
                (-25.0 * u0 + 48.0 * u1 - 36.0 * u2 + 16.0 * u3 - 3.0 * u4) /
                (12.0 * delta);
            const double w = std::cosh(f.geom.xi2) - std::cos(th);
            probe[k - 1] = -(w / f.geom.alpha) * du_dxi;
            analytic[k - 1] = normal_derivative_outer(f, th);
            scale = std::max(scale, std::abs(analytic[k - 1]));
        }
        for (int k = 0; k < 9; ++k)
            REQUIRE(std::abs(analytic[k] - probe[k]) <= 1e-7 * scale);
    }
}

TEST_CASE("outward flux is positive where the trace is positive") {
    const EigenField f = solved_field(1, 1.0, 2.0, 0.5);
    REQUIRE(evaluate(f, f.geom.xi2, M_PI / 2.0) > 0.0);
    REQUIRE(normal_derivative_outer(f, M_PI / 2.0) > 0.0);
}

TEST_CASE("ground state is one-signed in the annulus") {
    const EigenField f = solved_field(2, 1.0, 2.0, 0.6);
    for (int i = 1; i < 50; ++i) {
        const double xi = f.geom.xi2 + (f.geom.xi1 - f.geom.xi2) * i / 50.0;
        for (int j = 0; j <= 50; ++j) {
            const double th = M_PI * j / 50.0;
            REQUIRE(evaluate(f, xi, th) > 0.0);
        }
    }
}

TEST_CASE("interior equation defect shrinks at second order") {
    const EigenField f = solved_field(1, 1.0, 2.0, 0.5);
    const double coarse = pde_residual(f, 100, 100);
    const double fine = pde_residual(f, 200, 200);
    REQUIRE(fine < coarse);
    REQUIRE(coarse / fine == Catch::Approx(4.0).margin(1.0));
    REQUIRE_THROWS_AS(pde_residual(f, 4, 100), BadGrid);
}

TEST_CASE("evaluation outside the closed annulus is rejected") {
    const EigenField f = solved_field(1, 1.0, 2.0, 0.5);
    REQUIRE_THROWS_AS(evaluate(f, f.geom.xi2 - 0.1, 1.0), OutsideAnnulus);
    REQUIRE_THROWS_AS(evaluate(f, f.geom.xi1 + 0.1, 1.0), OutsideAnnulus);
    // a boundary point rounded a hair outward still evaluates
    REQUIRE_NOTHROW(evaluate(f, f.geom.xi2 * (1.0 - 1e-16), 1.0));
}
