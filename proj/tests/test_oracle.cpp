// Independent verification routes: the concentric closed form and the
// finite-difference route that never touches the series solver. Frozen grid
// eigenvalues pin the discretisation; the h^2 ladder and Richardson fold are
// checked explicitly.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>

#include "steklov/geometry.hpp"
#include "steklov/oracle.hpp"
#include "steklov/spectral.hpp"

using namespace steklov;

TEST_CASE("concentric closed form") {
    REQUIRE(concentric_sigma(1, 1.0, 2.0) == Catch::Approx(0.5).epsilon(1e-15));
    REQUIRE(concentric_sigma(2, 1.0, 2.0) == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
    REQUIRE(concentric_sigma(3, 1.0, 2.0) == Catch::Approx(3.0 / 14.0).epsilon(1e-15));
    REQUIRE_THROWS_AS(concentric_sigma(1, 2.0, 1.0), BadRadii);
    REQUIRE_THROWS_AS(concentric_sigma(0, 1.0, 2.0), BadRadii);
}

TEST_CASE("frozen grid eigenvalues at (n=1, r1=1, r2=2, t=0.5)") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    const FdSolution f32 = fd_sigma(g, 32, 32);
    const FdSolution f64 = fd_sigma(g, 64, 64);
    const FdSolution f128 = fd_sigma(g, 128, 128);
    REQUIRE(f32.sigma == Catch::Approx(0.3836048719695923).epsilon(1e-8));
    REQUIRE(f64.sigma == Catch::Approx(0.3842399297282416).epsilon(1e-8));
    REQUIRE(f128.sigma == Catch::Approx(0.3843998952591517).epsilon(1e-8));

    // second-order ladder: each halving quarters the defect
    const double ratio = (f32.sigma - f64.sigma) / (f64.sigma - f128.sigma);
    REQUIRE(ratio == Catch::Approx(4.0).margin(0.5));

    // Richardson fold of the two finest grids lands within 1e-6 of the series
    const double sigma_series = 0.3844533862659779983882607;
    const double extrap = richardson(f64.sigma, f128.sigma);
    REQUIRE(std::abs(extrap - sigma_series) / sigma_series < 1e-6);
}

TEST_CASE("solution structure and residual contract") {
    const AnnulusGeometry g = build_geometry(2, 1.0, 2.0, 0.7);
    const FdSolution f = fd_sigma(g, 48, 40);
    REQUIRE(f.N_xi == 48);
    REQUIRE(f.N_th == 40);
    REQUIRE(f.h_xi == Catch::Approx((g.xi1 - g.xi2) / 48.0).epsilon(1e-15));
    REQUIRE(f.h_th == Catch::Approx(M_PI / 40.0).epsilon(1e-15));
    REQUIRE(f.iterations >= 1);
    REQUIRE(f.residual <= 1e-12);
    REQUIRE(f.sigma > 0.0);

    // boundary trace: one-signed, scaled to max exactly 1
    REQUIRE(f.boundary.size() == 41);
    double big = 0.0;
    for (double v : f.boundary) {
        REQUIRE(v > 0.0);
        big = std::max(big, v);
    }
    REQUIRE(big == 1.0);

    // grid: row 0 is the boundary trace, row N_xi is the Dirichlet zero
    REQUIRE(f.grid.size() == 49 * 41);
    for (std::size_t j = 0; j <= 40; ++j) {
        REQUIRE(f.grid[j] == f.boundary[j]);
        REQUIRE(f.grid[48 * 41 + j] == 0.0);
    }
    // interior stays one-signed
    for (std::size_t i = 1; i < 48; ++i)
        for (std::size_t j = 0; j <= 40; ++j) REQUIRE(f.grid[i * 41 + j] > 0.0);
}

TEST_CASE("grid limits") {
    const AnnulusGeometry g = build_geometry(1, 1.0, 2.0, 0.5);
    REQUIRE_THROWS_AS(fd_sigma(g, 16, 64), BadGrid);
    REQUIRE_THROWS_AS(fd_sigma(g, 64, 16), BadGrid);
    REQUIRE_THROWS_AS(fd_sigma(g, 512, 64), BadGrid);
}

TEST_CASE("richardson fold") {
    REQUIRE(richardson(1.0, 1.0) == 1.0);
    REQUIRE(richardson(0.3, 0.6) == Catch::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("the two routes agree") {
    for (int n : {1, 2}) {
        const AnnulusGeometry g = build_geometry(n, 1.0, 2.0, 0.5);
        const double spectral = solve_sigma(g).sigma;
        const FdSolution coarse = fd_sigma(g, 64, 64);
        const FdSolution fine = fd_sigma(g, 128, 128);
        const OracleComparison c = compare(spectral, coarse, fine, 1e-3);
        REQUIRE(c.pass);
        REQUIRE(c.rel_diff <= 1e-4);
        REQUIRE(c.fd_richardson ==
                Catch::Approx(richardson(coarse.sigma, fine.sigma)).epsilon(1e-15));
        REQUIRE(c.N_xi == 64);

        // a 1e-2 perturbation of the series value must be flagged
        const OracleComparison bad = compare(spectral * 1.01, coarse, fine, 1e-3);
        REQUIRE_FALSE(bad.pass);
        REQUIRE(bad.rel_diff > 1e-3);
    }
}
