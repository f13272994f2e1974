// Gauss-Legendre and Chebyshev (second kind) rules: node layout, exactness
// degrees, and the affine-interval wrapper.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "steklov/quadrature.hpp"

using namespace steklov;

namespace {
constexpr double kPi = 3.14159265358979323846;

double integrate_unit(const QuadratureRule& r, double (*f)(double)) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}
}  // namespace

TEST_CASE("gauss_legendre node layout") {
    const QuadratureRule r = gauss_legendre(12);
    REQUIRE(r.nodes.size() == 12);
    REQUIRE(r.weights.size() == 12);
    for (std::size_t i = 1; i < 12; ++i) REQUIRE(r.nodes[i] > r.nodes[i - 1]);
    double wsum = 0.0;
    for (std::size_t i = 0; i < 12; ++i) {
        REQUIRE(r.weights[i] > 0.0);
        // symmetry about the origin
        REQUIRE(r.nodes[i] == Catch::Approx(-r.nodes[11 - i]).margin(1e-15));
        REQUIRE(r.weights[i] == Catch::Approx(r.weights[11 - i]).margin(1e-15));
        wsum += r.weights[i];
    }
    REQUIRE(wsum == Catch::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gauss_legendre exactness to degree 2n-1") {
    const QuadratureRule r = gauss_legendre(5);
    // odd powers vanish, even powers integrate to 2/(k+1)
    REQUIRE(integrate_unit(r, +[](double x) { return x * x; }) ==
            Catch::Approx(2.0 / 3.0).epsilon(1e-14));
    REQUIRE(integrate_unit(r, +[](double x) { return std::pow(x, 8); }) ==
            Catch::Approx(2.0 / 9.0).epsilon(1e-13));
    REQUIRE(integrate_unit(r, +[](double x) { return std::pow(x, 9); }) ==
            Catch::Approx(0.0).margin(1e-15));
    // degree 10 must NOT be exact for n = 5 (sanity that the degree is sharp)
    const double deg10 = integrate_unit(r, +[](double x) { return std::pow(x, 10); });
    REQUIRE(std::abs(deg10 - 2.0 / 11.0) > 1e-6);
}

TEST_CASE("gauss_legendre converges on a smooth integrand") {
    // int_-1^1 exp(x) dx = e - 1/e
    const double exact = std::exp(1.0) - std::exp(-1.0);
    const double got = integrate_unit(gauss_legendre(16), +[](double x) { return std::exp(x); });
    REQUIRE(got == Catch::Approx(exact).epsilon(1e-15));
}

TEST_CASE("chebyshev_second integrates against sqrt(1-x^2)") {
    const QuadratureRule r = chebyshev_second(8);
    REQUIRE(r.nodes.size() == 8);
    for (std::size_t i = 1; i < 8; ++i) REQUIRE(r.nodes[i] > r.nodes[i - 1]);
    // int_-1^1 sqrt(1-x^2) dx = pi/2, with x^2 weight pi/8, x^4 weight pi/16
    REQUIRE(integrate_unit(r, +[](double) { return 1.0; }) ==
            Catch::Approx(kPi / 2.0).epsilon(1e-14));
    REQUIRE(integrate_unit(r, +[](double x) { return x * x; }) ==
            Catch::Approx(kPi / 8.0).epsilon(1e-14));
    REQUIRE(integrate_unit(r, +[](double x) { return x * x * x * x; }) ==
            Catch::Approx(kPi / 16.0).epsilon(1e-14));
    REQUIRE(integrate_unit(r, +[](double x) { return std::pow(x, 15); }) ==
            Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("integrate maps the interval affinely") {
    const QuadratureRule r = gauss_legendre(10);
    REQUIRE(integrate(r, 0.0, 2.0, [](double x) { return x; }) ==
            Catch::Approx(2.0).epsilon(1e-14));
    REQUIRE(integrate(gauss_legendre(20), 1.0, 4.0, [](double x) { return 1.0 / x; }) ==
            Catch::Approx(std::log(4.0)).epsilon(1e-10));
    // orientation: empty interval gives zero
    REQUIRE(integrate(r, 1.5, 1.5, [](double x) { return x; }) ==
            Catch::Approx(0.0).margin(1e-15));
}
