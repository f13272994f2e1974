// quadrature.hpp -- Gauss rules used for norms, orthogonality and boundary integrals
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

struct QuadratureRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // same length, all positive
};

// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n - 1.
// Nodes are the roots of P_n found by Newton from the Chebyshev guess; the
// iteration is started from the upper half and mirrored, so the rule is
// symmetric to the last bit.
inline QuadratureRule gauss_legendre(std::size_t n) {
    if (n == 0) throw Error("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t k = 0; k < half; ++k) {
        // root counted from the +1 end
        double x = std::cos(M_PI * (static_cast<double>(k) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n and P_n' by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 =
                    ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // one clean-up evaluation at the converged node
        double p0 = 1.0, p1 = x;
        for (std::size_t j = 2; j <= n; ++j) {
            const double p2 =
                ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
            p0 = p1;
            p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - k] = x;
        rule.weights[n - 1 - k] = w;
        rule.nodes[k] = -x;
        rule.weights[k] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // exact midpoint for odd rules
    return rule;
}

// Gauss-Chebyshev rule of the second kind on [-1, 1]: integrates
// f(x) * sqrt(1 - x^2) exactly for polynomial f of degree <= 2n - 1.
inline QuadratureRule chebyshev_second(std::size_t n) {
    if (n == 0) throw Error("chebyshev_second: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double a = M_PI * static_cast<double>(k) / (static_cast<double>(n) + 1.0);
        const double s = std::sin(a);
        rule.nodes[n - k] = std::cos(a);  // ascending in x
        rule.weights[n - k] = M_PI / (static_cast<double>(n) + 1.0) * s * s;
    }
    return rule;
}

// Integrate f over [a, b] with a given rule.
template <typename F>
double integrate(const QuadratureRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + rad * rule.nodes[i]);
    return rad * sum;
}

}  // namespace steklov
