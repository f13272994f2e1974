// tridiagonal.hpp -- symmetric tridiagonal eigensolver (Sturm bisection + inverse iteration)
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

struct SymTridiagonal {
    std::vector<double> diag;  // size N
    std::vector<double> off;   // size N - 1; off[i] couples rows i and i + 1
};

inline double inf_norm(const SymTridiagonal& T) {
    const std::size_t N = T.diag.size();
    double norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double row = std::abs(T.diag[i]);
        if (i > 0) row += std::abs(T.off[i - 1]);
        if (i + 1 < N) row += std::abs(T.off[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

// Number of eigenvalues strictly below x, by the sign count of the LDL^T
// pivots. Zero pivots are nudged to a tiny negative value (the usual pivmin
// safeguard), which cannot change the count by more than the multiplicity.
inline int sturm_count(const SymTridiagonal& T, double x) {
    const std::size_t N = T.diag.size();
    double maxoff = 0.0;
    for (double e : T.off) maxoff = std::max(maxoff, std::abs(e));
    const double pivmin =
        std::max(maxoff * maxoff, 1.0) * std::numeric_limits<double>::min() * 64.0;
    int count = 0;
    double q = T.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < N; ++i) {
        q = T.diag[i] - x - T.off[i - 1] * T.off[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (k is 0-based), bisected to an absolute width of
// 1e-13 * ||T||_inf inside the Gershgorin interval.
inline double eigenvalue(const SymTridiagonal& T, std::size_t k) {
    const std::size_t N = T.diag.size();
    if (N == 0) throw Error("eigenvalue: empty matrix");
    if (k >= N) throw Error("eigenvalue: index out of range");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < N; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.off[i - 1]);
        if (i + 1 < N) r += std::abs(T.off[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    const double tol = 1e-13 * std::max(inf_norm(T), 1e-300);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(T, mid) > static_cast<int>(k))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

namespace detail {

// Solve (T - shift I) x = b by LU with partial pivoting (dgttrf-style:
// the pivoted factor gains a second superdiagonal). Factor first, then apply
// the recorded swaps and multipliers to b in elimination order.
inline void shifted_tridiag_solve(const SymTridiagonal& T, double shift,
                                  std::vector<double>& b) {
    const std::size_t N = T.diag.size();
    std::vector<double> dl(N > 1 ? N - 1 : 0), d(N), du(N > 1 ? N - 1 : 0),
        du2(N > 2 ? N - 2 : 0, 0.0);
    for (std::size_t i = 0; i < N; ++i) d[i] = T.diag[i] - shift;
    for (std::size_t i = 0; i + 1 < N; ++i) dl[i] = du[i] = T.off[i];

    const double tiny = std::numeric_limits<double>::min() * 4.0;
    std::vector<char> swapped(N > 1 ? N - 1 : 0, 0);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny) d[i] = std::copysign(tiny, d[i] == 0.0 ? 1.0 : d[i]);
            const double mult = dl[i] / d[i];
            dl[i] = mult;  // store the multiplier
            d[i + 1] -= mult * du[i];
        } else {
            swapped[i] = 1;
            const double mult = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = mult;
            const double tmp = d[i + 1];
            d[i + 1] = du[i] - mult * tmp;
            if (i + 2 < N) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du[i + 1];
            }
            du[i] = tmp;
        }
    }
    // forward elimination of b, swaps interleaved exactly as during factorisation
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (swapped[i]) std::swap(b[i], b[i + 1]);
        b[i + 1] -= dl[i] * b[i];
    }
    // back substitution
    if (std::abs(d[N - 1]) < tiny) d[N - 1] = std::copysign(tiny, d[N - 1] == 0.0 ? 1.0 : d[N - 1]);
    b[N - 1] /= d[N - 1];
    if (N >= 2) {
        const std::size_t i = N - 2;
        b[i] = (b[i] - du[i] * b[i + 1]) / d[i];
    }
    for (std::size_t ii = N; ii >= 3; --ii) {
        const std::size_t i = ii - 3;
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
}

}  // namespace detail

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  // unit 2-norm, vector[0] > 0
    int iterations = 0;
    double residual = 0.0;  // ||T v - value v||_2 / ||T||_inf
};

// Smallest eigenvalue and its eigenvector. The eigenvalue comes from Sturm
// bisection; the eigenvector from inverse iteration at that (nearly singular)
// shift. The direction converges in 2-3 steps, but iteration continues until
// the residual stops improving: each extra solve shrinks the contamination of
// the other eigendirections by |lambda - shift| / gap, and only near the
// rounding floor do the exponentially small tail entries of the vector become
// trustworthy (the coefficient-ratio diagnostics read those tails).
inline EigenPair smallest_eigenpair(const SymTridiagonal& T) {
    const std::size_t N = T.diag.size();
    if (N == 0) throw Error("smallest_eigenpair: empty matrix");
    EigenPair out;
    out.value = eigenvalue(T, 0);
    const double scale = std::max(inf_norm(T), 1e-300);

    std::vector<double> v(N, 1.0 / std::sqrt(static_cast<double>(N)));
    if (N == 1) {
        out.vector = {1.0};
        out.residual = 0.0;
        return out;
    }
    std::vector<double> tv(N), best;
    double best_res = std::numeric_limits<double>::infinity();
    const double floor = 50.0 * std::numeric_limits<double>::epsilon();
    for (int iter = 1; iter <= 25; ++iter) {
        detail::shifted_tridiag_solve(T, out.value, v);
        double nrm = 0.0;
        for (double c : v) nrm += c * c;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw NoConvergence("smallest_eigenpair: inverse iteration broke down");
        for (double& c : v) c /= nrm;
        for (std::size_t i = 0; i < N; ++i) {
            double s = T.diag[i] * v[i];
            if (i > 0) s += T.off[i - 1] * v[i - 1];
            if (i + 1 < N) s += T.off[i] * v[i + 1];
            tv[i] = s - out.value * v[i];
        }
        double res = 0.0;
        for (double c : tv) res += c * c;
        res = std::sqrt(res) / scale;
        out.iterations = iter;
        const bool improved = res < best_res;
        if (improved) {
            best_res = res;
            best = v;
        }
        if (res <= floor) break;
        if (!improved && best_res <= 1e-10) break;  // stagnated at the floor
    }
    out.residual = best_res;
    if (out.residual > 1e-10)
        throw NoConvergence("smallest_eigenpair: residual above 1e-10 after 25 iterations");
    if (best[0] < 0.0)
        for (double& c : best) c = -c;
    // Rayleigh polish: the bisection value is only good to ~1e-13 ||T||, the
    // quotient of the converged vector reaches the rounding floor ~eps ||T||.
    double rq = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double s = T.diag[i] * best[i];
        if (i > 0) s += T.off[i - 1] * best[i - 1];
        if (i + 1 < N) s += T.off[i] * best[i + 1];
        rq += best[i] * s;
        tv[i] = s;
    }
    out.value = rq;
    double res = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double r = tv[i] - rq * best[i];
        res += r * r;
    }
    out.residual = std::sqrt(res) / scale;
    out.vector = std::move(best);
    return out;
}

}  // namespace steklov
