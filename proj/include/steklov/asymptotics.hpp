// asymptotics.hpp -- coefficient-ratio diagnostics and the touching-ball lower bound
// SPDX-License-Identifier: MIT
//
// The three-term recursion satisfied by the boundary coefficients C~_m can be
// folded into the scalar ratio
//   R_m = c_m^2 C~_m / (c_{m-1}^2 C~_{m-1}),    m >= 1,
// which obeys R_{m+1} = S_m - (m/(m+n))/R_m with
//   S_m = (2m+n)/(m+n) cosh xi2
//         - (2 alpha sigma + n sinh xi2)/(m+n) tanh((m+n/2)(xi1-xi2)).
// The fixed points of the map x -> S_m - (m/(m+n))/x are the roots L_m <= U_m
// of x^2 - S_m x + m/(m+n); as m grows S_m -> 2 cosh xi2 and the roots tend
// to e^{-xi2} and e^{xi2}. The coefficient ratio tracks the lower (repelling)
// root, so R_m -> e^{-xi2}; forward iteration of the recursion amplifies any
// input error by prod (m/(m+n))/R_m^2 ~ e^{2 xi2 m} per step and is only
// usable as a cross-check inside an amplification-limited window.
#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "steklov/errors.hpp"
#include "steklov/geometry.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

// Sentinel for "no such index" (printed as infinity by the CLI).
inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Lower bound for sigma in the touching limit: ((n+1) r1 - n r2)/(2 r2 (r2-r1)).
// May be <= 0 (vacuous) when r2 >= (n+1) r1 / n.
inline double touching_limit_bound(int n, double r1, double r2) {
    if (!(0.0 < r1 && r1 < r2)) throw BadRadii("touching_limit_bound: need 0 < r1 < r2");
    return ((n + 1) * r1 - n * r2) / (2.0 * r2 * (r2 - r1));
}

// Closed form S_m; m passed as a real so very large indices stay exact.
inline double s_value(const AnnulusGeometry& g, double sigma, double m) {
    const double gap = g.xi1 - g.xi2;
    return (2.0 * m + g.n) / (m + g.n) * std::cosh(g.xi2) -
           (2.0 * g.alpha * sigma + g.n * std::sinh(g.xi2)) / (m + g.n) *
               std::tanh((m + 0.5 * g.n) * gap);
}

// |S_m - 2 cosh xi2| <= s_envelope(m): both deviation terms carry 1/(m+n).
inline double s_envelope(const AnnulusGeometry& g, double sigma, double m) {
    return (g.n * std::cosh(g.xi2) + 2.0 * g.alpha * sigma +
            g.n * std::sinh(g.xi2)) / (m + g.n);
}

struct FixedPointPair {
    bool real = false;  // discriminant S^2 - 4m/(m+n) > 0
    double L = std::numeric_limits<double>::quiet_NaN();
    double U = std::numeric_limits<double>::quiet_NaN();
};

// Roots of x^2 - S x + m/(m+n); U by the stable branch, L via Vieta.
inline FixedPointPair fixed_points(int n, double m, double S) {
    const double p = m / (m + n);
    const double disc = S * S - 4.0 * p;
    FixedPointPair fp;
    if (disc <= 0.0) return fp;
    fp.real = true;
    fp.U = 0.5 * (S + std::sqrt(disc));
    fp.L = (m == 0.0) ? 0.0 : p / fp.U;
    return fp;
}

// Small-alpha minorant of S_m used by the lower-bound check:
//   Q_m = (m+n/2)/(m+n) [2 - (2 alpha sigma + n alpha/r2)(alpha/r1 - alpha/r2)
//                          + (alpha/r2)^2].
inline double s_minorant(const AnnulusGeometry& g, double sigma, double m) {
    const double a1 = g.alpha / g.r1, a2 = g.alpha / g.r2;
    const double bracket =
        2.0 - (2.0 * g.alpha * sigma + g.n * a2) * (a1 - a2) + a2 * a2;
    return (m + 0.5 * g.n) / (m + g.n) * bracket;
}

struct RecurrenceDiagnostics {
    int n = 0;
    double alpha = 0, xi1 = 0, xi2 = 0, sigma = 0;
    double S_inf = 0, L_inf = 0, U_inf = 0;
    std::vector<double> S, L, U, c_sq;  // closed forms, index m = 0..len-1
    std::vector<double> R;              // ratio per coefficient pair; NaN outside validity
    std::size_t last_valid = 0;         // largest m with |C~_m| above threshold
    std::size_t N1 = kNoIndex;          // first ratio index past the validity threshold
    std::size_t N2 = kNoIndex;          // first m >= 1 with nonpositive discriminant
    double threshold = 0;               // 1e3 * eps_mach * max|C~|
};

inline RecurrenceDiagnostics diagnostics(const AnnulusGeometry& g,
                                         const SpectralSolution& sol,
                                         std::size_t len = 501) {
    if (!(sol.recursion_residual <= 1e-8))
        throw NoConvergence("diagnostics: spectral solution residual too large");
    RecurrenceDiagnostics d;
    d.n = g.n;
    d.alpha = g.alpha;
    d.xi1 = g.xi1;
    d.xi2 = g.xi2;
    d.sigma = sol.sigma;
    d.S_inf = 2.0 * std::cosh(g.xi2);
    d.L_inf = std::exp(-g.xi2);
    d.U_inf = std::exp(g.xi2);
    len = std::max<std::size_t>(len, 2);
    const double gap = g.xi1 - g.xi2;
    d.S.resize(len);
    d.L.resize(len);
    d.U.resize(len);
    d.c_sq.resize(len);
    for (std::size_t m = 0; m < len; ++m) {
        d.S[m] = s_value(g, sol.sigma, static_cast<double>(m));
        d.c_sq[m] = coth_pos((static_cast<double>(m) + 0.5 * g.n) * gap);
        const FixedPointPair fp = fixed_points(g.n, static_cast<double>(m), d.S[m]);
        d.L[m] = fp.L;
        d.U[m] = fp.U;
        if (m >= 1 && !fp.real && d.N2 == kNoIndex) d.N2 = m;
    }
    // The discriminant scan must not depend on the table length: keep going
    // (closed forms only) well past the expected eps^{-1/2} onset.
    const std::size_t n2_scan = std::max<std::size_t>(std::max(len, sol.M), 100000);
    for (std::size_t m = len; m < n2_scan && d.N2 == kNoIndex; ++m) {
        const double S = s_value(g, sol.sigma, static_cast<double>(m));
        if (!fixed_points(g.n, static_cast<double>(m), S).real) d.N2 = m;
    }
    double cmax = 0.0;
    for (double c : sol.coeff) cmax = std::max(cmax, std::abs(c));
    d.threshold = 1e3 * DBL_EPSILON * cmax;
    const std::size_t M = sol.M;
    // Truncating at M forces C~_M = 0, which mixes the growing recurrence mode
    // into the tail with relative size e^{-2 xi2 (M-m)}; stay far enough from
    // the boundary that this pollution is below 1e-8.
    const std::size_t buffer =
        static_cast<std::size_t>(std::ceil(std::log(1e8) / (2.0 * g.xi2)));
    const std::size_t m_cap = (M >= buffer + 2) ? M - 1 - buffer : 1;
    d.R.assign(M, std::numeric_limits<double>::quiet_NaN());
    d.last_valid = 0;
    for (std::size_t m = 1; m <= m_cap; ++m) {
        if (std::abs(sol.coeff[m]) <= d.threshold) {
            d.N1 = m;
            break;
        }
        const double c2m = (m < len) ? d.c_sq[m]
                                     : coth_pos((static_cast<double>(m) + 0.5 * g.n) * gap);
        const double c2p = (m - 1 < len)
                               ? d.c_sq[m - 1]
                               : coth_pos((static_cast<double>(m) - 1 + 0.5 * g.n) * gap);
        d.R[m] = (c2m * sol.coeff[m]) / (c2p * sol.coeff[m - 1]);
        d.last_valid = m;
    }
    return d;
}

struct RecursionCrossCheck {
    std::size_t window_end = 0;   // last index compared
    double max_deviation = 0.0;   // max |R_iterated - R_ratio| inside the window
    double amplification = 1.0;   // error growth factor accumulated at window_end
};

// Forward-iterates the scalar recursion from R_1 = S_0 and compares against
// the coefficient ratios while the accumulated error amplification stays
// below 1e6 (beyond that the iteration has left the repelling branch and the
// comparison is meaningless in double precision).
inline RecursionCrossCheck recursion_crosscheck(const RecurrenceDiagnostics& d) {
    RecursionCrossCheck cc;
    if (d.last_valid < 1) return cc;
    double rhat = d.S[0];
    double amp = 1.0;
    for (std::size_t m = 1; m <= d.last_valid; ++m) {
        cc.window_end = m;
        cc.amplification = amp;
        cc.max_deviation = std::max(cc.max_deviation, std::abs(rhat - d.R[m]));
        if (m + 1 > d.last_valid) break;
        const double mm = static_cast<double>(m);
        amp *= (mm / (mm + d.n)) / (rhat * rhat);
        if (amp > 1e6) break;
        const double Sm = (m < d.S.size())
                              ? d.S[m]
                              : s_value(AnnulusGeometry{d.n, 0, 0, 0, 0, d.alpha, d.xi1, d.xi2},
                                        d.sigma, mm);
        rhat = Sm - (mm / (mm + d.n)) / rhat;
    }
    return cc;
}

struct LimitPoint {
    double eps = 0, t = 0, alpha = 0, gap = 0, sigma = 0, bound = 0, margin = 0;
    std::size_t M = 0;
    bool s_monotone = false;     // S_m strictly increasing for m = 0..500
    double k_required = 0;       // max_m (Q_m - S_m)/alpha^3 over m <= 500
    bool minorant_ok = false; // S_m >= Q_m - K alpha^3 with the calibrated K
    double r_limit_error = 0;    // |R_{last_valid} - e^{-xi2}|
    std::size_t last_valid = 0;
};

struct LimitStudy {
    int n = 0;
    double r1 = 0, r2 = 0, tol = 0;
    double K = 0;                 // calibrated at the largest eps, reused below
    double liminf_estimate = 0;   // min sigma over the eps list (proxy for liminf)
    bool margins_nonnegative = false;
    bool margins_monotone = false;  // non-increasing along decreasing eps (tol slack)
    std::vector<LimitPoint> points; // sorted by decreasing eps
};

inline LimitStudy limit_study(int n, double r1, double r2,
                              std::vector<double> eps_list, double tol = 1e-6) {
    if (eps_list.empty()) throw OutOfRange("limit_study: empty eps list");
    for (double e : eps_list)
        if (!(e > 0.0 && e < r2 - r1))
            throw OutOfRange("limit_study: eps outside (0, r2 - r1)");
    std::sort(eps_list.begin(), eps_list.end(), std::greater<double>());
    LimitStudy st;
    st.n = n;
    st.r1 = r1;
    st.r2 = r2;
    st.tol = tol;
    const double bound = touching_limit_bound(n, r1, r2);
    for (double eps : eps_list) {
        const AnnulusGeometry g = build_geometry(n, r1, r2, r2 - r1 - eps);
        const SpectralSolution sol = solve_sigma(g);
        const RecurrenceDiagnostics d = diagnostics(g, sol, 501);
        LimitPoint p;
        p.eps = eps;
        p.t = g.t;
        p.alpha = g.alpha;
        p.gap = g.xi1 - g.xi2;
        p.sigma = sol.sigma;
        p.bound = bound;
        p.margin = sol.sigma - bound;
        p.M = sol.M;
        p.s_monotone = true;
        for (std::size_t m = 0; m + 1 <= 500; ++m)
            if (!(d.S[m] < d.S[m + 1])) { p.s_monotone = false; break; }
        double kreq = -std::numeric_limits<double>::infinity();
        const double a3 = g.alpha * g.alpha * g.alpha;
        for (std::size_t m = 0; m <= 500; ++m)
            kreq = std::max(kreq, (s_minorant(g, sol.sigma, static_cast<double>(m)) -
                                   d.S[m]) / a3);
        p.k_required = kreq;
        p.last_valid = d.last_valid;
        p.r_limit_error = (d.last_valid >= 1)
                              ? std::abs(d.R[d.last_valid] - d.L_inf)
                              : std::numeric_limits<double>::quiet_NaN();
        st.points.push_back(p);
    }
    st.K = std::max(0.0, st.points.front().k_required);
    const double a3slack = 1e-12;
    st.margins_nonnegative = true;
    st.margins_monotone = true;
    st.liminf_estimate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < st.points.size(); ++i) {
        LimitPoint& p = st.points[i];
        const double a3 = p.alpha * p.alpha * p.alpha;
        p.minorant_ok = p.k_required * a3 <= st.K * a3 + a3slack;
        if (!(p.margin >= -tol)) st.margins_nonnegative = false;
        if (i > 0 && !(p.margin <= st.points[i - 1].margin + tol))
            st.margins_monotone = false;
        st.liminf_estimate = std::min(st.liminf_estimate, p.sigma);
    }
    return st;
}

}  // namespace steklov
