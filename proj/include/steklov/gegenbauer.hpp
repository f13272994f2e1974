// gegenbauer.hpp -- Gegenbauer (ultraspherical) polynomials G_m^(lambda)
// SPDX-License-Identifier: MIT
//
// Conventions: G_0 = 1, G_1(s) = 2 lambda s, and
//   m G_m(s) = 2 (m + lambda - 1) s G_{m-1}(s) - (m + 2 lambda - 2) G_{m-2}(s).
// The angular eigenfunctions of the axisymmetric problem are G_m^(n/2)(cos theta).
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

namespace detail {

inline void check_gegenbauer_args(double lambda, int m, double s) {
    if (!(lambda > 0.0)) throw BadDegree("gegenbauer: need lambda > 0");
    if (m < 0) throw BadDegree("gegenbauer: need degree m >= 0");
    if (!(s >= -1.0 && s <= 1.0)) throw OutOfRange("gegenbauer: need s in [-1, 1]");
}

// Forward recurrence; stable on [-1, 1] for lambda > 0.
inline double gegenbauer_raw(double lambda, int m, double s) {
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * lambda * s;
    for (int k = 2; k <= m; ++k) {
        const double next =
            (2.0 * (k + lambda - 1.0) * s * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

inline double gegenbauer_value(double lambda, int m, double s) {
    detail::check_gegenbauer_args(lambda, m, s);
    return detail::gegenbauer_raw(lambda, m, s);
}

// Values G_0 .. G_maxm at a fixed argument in one recurrence pass.
inline std::vector<double> gegenbauer_sequence(double lambda, int maxm, double s) {
    detail::check_gegenbauer_args(lambda, maxm, s);
    std::vector<double> out(static_cast<std::size_t>(maxm) + 1);
    out[0] = 1.0;
    if (maxm == 0) return out;
    out[1] = 2.0 * lambda * s;
    for (int k = 2; k <= maxm; ++k)
        out[k] = (2.0 * (k + lambda - 1.0) * s * out[k - 1] -
                  (k + 2.0 * lambda - 2.0) * out[k - 2]) /
                 k;
    return out;
}

struct GegenbauerValue {
    double value;
    double derivative;  // d/ds G_m^(lambda)(s)
};

// Value and derivative; the derivative uses the parameter-shift identity
// d/ds G_m^(lambda) = 2 lambda G_{m-1}^(lambda+1), never divided differences.
inline GegenbauerValue gegenbauer_eval(double lambda, int m, double s) {
    detail::check_gegenbauer_args(lambda, m, s);
    GegenbauerValue r;
    r.value = detail::gegenbauer_raw(lambda, m, s);
    r.derivative = m >= 1 ? 2.0 * lambda * detail::gegenbauer_raw(lambda + 1.0, m - 1, s) : 0.0;
    return r;
}

// Second derivative by applying the shift identity twice.
inline double gegenbauer_second_derivative(double lambda, int m, double s) {
    detail::check_gegenbauer_args(lambda, m, s);
    if (m < 2) return 0.0;
    return 4.0 * lambda * (lambda + 1.0) * detail::gegenbauer_raw(lambda + 2.0, m - 2, s);
}

// G_m^(lambda)(1) = Gamma(m + 2 lambda) / (Gamma(m + 1) Gamma(2 lambda)),
// also the maximum modulus on [-1, 1]. Computed in log space; every Gamma
// argument is positive so no sign tracking is needed.
inline double gegenbauer_value_at_one(double lambda, int m) {
    if (!(lambda > 0.0)) throw BadDegree("gegenbauer: need lambda > 0");
    if (m < 0) throw BadDegree("gegenbauer: need degree m >= 0");
    return std::exp(std::lgamma(m + 2.0 * lambda) - std::lgamma(m + 1.0) -
                    std::lgamma(2.0 * lambda));
}

// Squared weighted L2 norm over [-1, 1] with weight (1 - s^2)^(lambda - 1/2):
//   2^(1 - 2 lambda) pi Gamma(m + 2 lambda) / (Gamma(lambda)^2 (m + lambda) m!).
inline double gegenbauer_norm_sq(double lambda, int m) {
    if (!(lambda > 0.0)) throw BadDegree("gegenbauer: need lambda > 0");
    if (m < 0) throw BadDegree("gegenbauer: need degree m >= 0");
    return std::exp((1.0 - 2.0 * lambda) * std::log(2.0) + std::log(M_PI) +
                    std::lgamma(m + 2.0 * lambda) - 2.0 * std::lgamma(lambda) -
                    std::log(m + lambda) - std::lgamma(m + 1.0));
}

// Coefficients of the multiplication rule at lambda = n/2:
//   (m + n/2) cos(theta) G_m = upper * G_{m+1} + lower * G_{m-1},
// returned as (lower, upper) = ((m + n - 1)/2, (m + 1)/2), with the
// convention G_{-1} == 0 so the lower term drops out at m = 0.
inline std::pair<double, double> cos_coupling(int n, int m) {
    if (n < 1) throw BadDegree("cos_coupling: need n >= 1");
    if (m < 0) throw BadDegree("cos_coupling: need m >= 0");
    return {0.5 * (m + n - 1.0), 0.5 * (m + 1.0)};
}

}  // namespace steklov
