// steklov.cpp -- command-line front end
// SPDX-License-Identifier: MIT
//
// Subcommands: solve, sweep, limit, diag, coords, oracle. Outputs are CSV or
// JSON records (stdout by default); verdicts and diagnostics go to stderr so
// the data stream stays machine-readable. Exit codes: 0 success, 2 invalid
// configuration, 3 solver failure, 4 check failure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steklov/steklov.hpp"

namespace {

using namespace steklov;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitCheck = 4;

int classify_error(const Error& e) {
    if (dynamic_cast<const DegenerateConcentric*>(&e) || dynamic_cast<const Overlap*>(&e) ||
        dynamic_cast<const BadRadii*>(&e) || dynamic_cast<const BadDegree*>(&e) ||
        dynamic_cast<const OutOfRange*>(&e) || dynamic_cast<const BadGrid*>(&e) ||
        dynamic_cast<const PoleSingular*>(&e) || dynamic_cast<const OutsideAnnulus*>(&e))
        return kExitConfig;
    return kExitSolver;
}

int report_error(const Error& e) {
    const int code = classify_error(e);
    std::cerr << "error: " << e.what();
    if (dynamic_cast<const DegenerateConcentric*>(&e))
        std::cerr << " [DegenerateConcentric; run `steklov oracle --concentric` "
                     "for the t = 0 closed form]";
    std::cerr << '\n';
    return code;
}

struct Problem {
    int n = 1;
    double r1 = 0, r2 = 0;
    double t = 0, eps = 0;
    bool has_t = false, has_eps = false;

    double resolve_t() const { return has_t ? t : r2 - r1 - eps; }
};

void add_problem_options(CLI::App* sub, Problem& p, bool need_offset) {
    sub->add_option("--n", p.n, "transverse sphere dimension (ambient dim is n+2)")
        ->required();
    sub->add_option("--r1", p.r1, "inner ball radius")->required();
    sub->add_option("--r2", p.r2, "outer ball radius")->required();
    auto* ot = sub->add_option("--t", p.t, "center offset");
    auto* oe = sub->add_option("--eps", p.eps, "gap width r2 - r1 - t");
    ot->excludes(oe);
    oe->excludes(ot);
    if (need_offset) {
        sub->callback([sub, &p, ot, oe]() {
            p.has_t = ot->count() > 0;
            p.has_eps = oe->count() > 0;
            if (!p.has_t && !p.has_eps)
                throw CLI::ValidationError(sub->get_name(),
                                           "exactly one of --t / --eps is required");
        });
    } else {
        sub->callback([&p, ot, oe]() {
            p.has_t = ot->count() > 0;
            p.has_eps = oe->count() > 0;
        });
    }
}

struct OutputArgs {
    std::string format = "csv";
    std::string path = "-";
    std::string config;
};

void add_output_options(CLI::App* sub, OutputArgs& o) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", o.path, "output path ('-' = stdout)")
        ->capture_default_str();
    sub->add_option("--config", o.config,
                    "flat key=value file; command-line flags take precedence");
}

int write_records(const std::vector<Record>& records, const OutputArgs& o) {
    const Format f = (o.format == "json") ? Format::Json : Format::Csv;
    emit(records, f, o.path, std::cout);
    return kExitOk;
}

double check_tol(double tol) {
    if (!(tol > 0.0 && tol <= 1e-2))
        throw OutOfRange("tol must lie in (0, 1e-2]");
    return tol;
}

// Flat key=value config support: a `--config FILE` given after the subcommand
// is expanded into `--key=value` tokens before parsing. Tokens already present
// on the command line win; `key=false` drops a flag.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open config file '" + path + "'");
    const auto given = [&args](const std::string& key) {
        const std::string opt = "--" + key;
        for (const std::string& a : args)
            if (a == opt || a.rfind(opt + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#' || line[first] == '[')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw OutOfRange("config line without '=': " + line);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw OutOfRange("config line without key: " + line);
        if (given(key)) continue;
        // --t and --eps are two spellings of one datum; either on the command
        // line overrides both config keys rather than colliding with them.
        if ((key == "t" || key == "eps") && (given("t") || given("eps"))) continue;
        if (value == "true")
            args.push_back("--" + key);
        else if (value != "false")
            args.push_back("--" + key + "=" + value);
    }
    return args;
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw OutOfRange("cannot parse number '" + tok + "'");
        }
        if (used != tok.size()) throw OutOfRange("cannot parse number '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw OutOfRange("empty number list");
    return out;
}

// "start:stop:step", endpoints included within half a step.
std::vector<double> parse_grid(const std::string& s) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<double> abc;
    while (std::getline(ss, tok, ':')) abc.push_back(std::stod(tok));
    if (abc.size() != 3) throw OutOfRange("grid must be start:stop:step");
    const double a = abc[0], b = abc[1], c = abc[2];
    if (!(c > 0.0) || b < a) throw OutOfRange("grid needs step > 0 and stop >= start");
    std::vector<double> out;
    const long kmax = std::lround((b - a) / c) + 1;
    for (long k = 0; k <= kmax; ++k) {
        const double v = a + static_cast<double>(k) * c;
        if (v <= b + 0.5 * c) out.push_back(v);
    }
    return out;
}

struct SolveResult {
    AnnulusGeometry g;
    SpectralSolution sol;
    double dirichlet = 0, steklov = 0;
};

SolveResult full_solve(const Problem& p, double tol) {
    SolveResult r;
    r.g = build_geometry(p.n, p.r1, p.r2, p.resolve_t());
    r.sol = solve_sigma(r.g, tol);
    EigenField f = make_eigenfield(r.g, r.sol);
    normalize(f);
    r.dirichlet = dirichlet_residual(f);
    r.steklov = steklov_residual(f);
    return r;
}

Record solve_record(const SolveResult& r) {
    const double bound = touching_limit_bound(r.g.n, r.g.r1, r.g.r2);
    return {
        fint("n", r.g.n),
        freal("r1", r.g.r1),
        freal("r2", r.g.r2),
        freal("t", r.g.t),
        freal("eps", r.g.eps),
        freal("alpha", r.g.alpha),
        freal("xi1", r.g.xi1),
        freal("xi2", r.g.xi2),
        fint("M", static_cast<long long>(r.sol.M)),
        freal("sigma", r.sol.sigma),
        freal("recursion_residual", r.sol.recursion_residual),
        freal("dirichlet_residual", r.dirichlet),
        freal("steklov_residual", r.steklov),
        freal("bound", bound),
        freal("margin", r.sol.sigma - bound),
    };
}

// ---------------------------------------------------------------- solve ----

struct SolveArgs {
    Problem p;
    OutputArgs out;
    double tol = 1e-6;
    bool oracle = false;
    std::size_t oracle_grid = 64;
};

int run_solve(const SolveArgs& a) {
    check_tol(a.tol);
    const SolveResult r = full_solve(a.p, a.tol);
    Record rec = solve_record(r);
    bool pass = true;
    double rel = 0, tol_cmp = 1e-3;
    if (a.oracle) {
        const FdSolution coarse = fd_sigma(r.g, a.oracle_grid, a.oracle_grid);
        const FdSolution fine = fd_sigma(r.g, 2 * a.oracle_grid, 2 * a.oracle_grid);
        const OracleComparison cmp = compare(r.sol.sigma, coarse, fine, tol_cmp);
        rec.push_back(freal("sigma_fd", fine.sigma));
        rec.push_back(freal("sigma_fd_richardson", cmp.fd_richardson));
        rec.push_back(freal("oracle_rel_diff", cmp.rel_diff));
        rec.push_back(fbool("oracle_pass", cmp.pass));
        pass = cmp.pass;
        rel = cmp.rel_diff;
    }
    write_records({rec}, a.out);
    if (!pass) {
        std::cerr << "check failed: oracle-agreement (rel diff " << format_real(rel)
                  << " > tol " << format_real(tol_cmp) << ")\n";
        return kExitCheck;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sweep ----

struct SweepArgs {
    Problem p;
    OutputArgs out;
    double tol = 1e-6;
    std::string t_grid, eps_grid;
    unsigned jobs = 1;
    bool fd = false;
    std::size_t fd_grid = 64;
};

int run_sweep(const SweepArgs& a) {
    check_tol(a.tol);
    if (a.t_grid.empty() == a.eps_grid.empty())
        throw OutOfRange("sweep needs exactly one of --t-grid / --eps-grid");
    std::vector<double> ts;
    for (double v : parse_grid(a.t_grid.empty() ? a.eps_grid : a.t_grid))
        ts.push_back(a.t_grid.empty() ? a.p.r2 - a.p.r1 - v : v);
    for (double t : ts)
        if (!(t > 0.0 && t < a.p.r2 - a.p.r1))
            throw OutOfRange("sweep grid leaves (0, r2 - r1)");

    struct Point {
        SolveResult r;
        double sigma_fd = 0;
    };
    const auto compute = [&](double t) {
        Problem q = a.p;
        q.has_t = true;
        q.has_eps = false;
        q.t = t;
        Point pt;
        pt.r = full_solve(q, a.tol);
        if (a.fd) pt.sigma_fd = fd_sigma(pt.r.g, a.fd_grid, a.fd_grid).sigma;
        return pt;
    };

    std::vector<Point> points(ts.size());
    if (a.jobs <= 1) {
        for (std::size_t i = 0; i < ts.size(); ++i) points[i] = compute(ts[i]);
    } else {
        std::vector<std::future<Point>> fut;
        fut.reserve(ts.size());
        for (double t : ts)
            fut.push_back(std::async(std::launch::async, compute, t));
        for (std::size_t i = 0; i < ts.size(); ++i) points[i] = fut[i].get();
    }

    std::vector<Record> recs;
    for (const Point& pt : points) {
        Record rec = solve_record(pt.r);
        if (a.fd) rec.push_back(freal("sigma_fd", pt.sigma_fd));
        recs.push_back(std::move(rec));
    }
    write_records(recs, a.out);

    // sigma must fall when t rises, whichever direction the grid walks
    bool mono_spectral = true, mono_fd = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double dt = ts[i] - ts[i - 1];
        if (!((points[i].r.sol.sigma - points[i - 1].r.sol.sigma) * dt < 0.0))
            mono_spectral = false;
        if (a.fd && !((points[i].sigma_fd - points[i - 1].sigma_fd) * dt < 0.0))
            mono_fd = false;
    }
    std::cerr << "sweep monotonicity (spectral, decreasing in t): "
              << (mono_spectral ? "PASS" : "FAIL") << '\n';
    if (a.fd)
        std::cerr << "sweep monotonicity (finite-difference, decreasing in t): "
                  << (mono_fd ? "PASS" : "FAIL") << '\n';
    if (!mono_spectral || (a.fd && !mono_fd)) {
        std::cerr << "check failed: monotonicity\n";
        return kExitCheck;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- limit ----

struct LimitArgs {
    Problem p;  // t/eps unused
    OutputArgs out;
    double tol = 1e-6;
    std::string eps_list = "1e-1,1e-2,1e-3,1e-4";
};

int run_limit(const LimitArgs& a) {
    check_tol(a.tol);
    const LimitStudy st =
        limit_study(a.p.n, a.p.r1, a.p.r2, parse_number_list(a.eps_list), a.tol);
    std::vector<Record> recs;
    bool ineq_ok = true;
    for (const LimitPoint& pt : st.points) {
        recs.push_back({
            freal("eps", pt.eps),
            freal("t", pt.t),
            freal("alpha", pt.alpha),
            freal("gap", pt.gap),
            fint("M", static_cast<long long>(pt.M)),
            freal("sigma", pt.sigma),
            freal("bound", pt.bound),
            freal("margin", pt.margin),
            fbool("s_monotone", pt.s_monotone),
            freal("k_required", pt.k_required),
            fbool("minorant_ok", pt.minorant_ok),
            freal("r_limit_error", pt.r_limit_error),
            fint("last_valid", static_cast<long long>(pt.last_valid)),
        });
        if (!pt.s_monotone || !pt.minorant_ok) ineq_ok = false;
    }
    write_records(recs, a.out);
    std::cerr << "calibrated K (largest eps): " << format_real(st.K) << '\n'
              << "liminf estimate (min sigma over eps list): "
              << format_real(st.liminf_estimate) << '\n'
              << "margins nonnegative (tol " << format_real(a.tol)
              << "): " << (st.margins_nonnegative ? "PASS" : "FAIL") << '\n'
              << "margins non-increasing along decreasing eps: "
              << (st.margins_monotone ? "PASS" : "FAIL") << '\n'
              << "inequality flags (S monotone, minorant): "
              << (ineq_ok ? "PASS" : "FAIL") << '\n';
    if (!st.margins_nonnegative || !st.margins_monotone || !ineq_ok) {
        std::cerr << "check failed: "
                  << (!st.margins_nonnegative
                          ? "margin-nonnegative"
                          : (!st.margins_monotone ? "margin-monotone" : "inequality-flags"))
                  << '\n';
        return kExitCheck;
    }
    return kExitOk;
}

// ----------------------------------------------------------------- diag ----

struct DiagArgs {
    Problem p;
    OutputArgs out;
    double tol = 1e-6;
    std::size_t mmax = 200;
};

int run_diag(const DiagArgs& a) {
    check_tol(a.tol);
    const AnnulusGeometry g = build_geometry(a.p.n, a.p.r1, a.p.r2, a.p.resolve_t());
    const SpectralSolution sol = solve_sigma(g, a.tol);
    const RecurrenceDiagnostics d = diagnostics(g, sol, a.mmax + 1);
    std::vector<Record> recs;
    const std::size_t rows = std::min(a.mmax + 1, sol.M);
    for (std::size_t m = 0; m < rows; ++m) {
        recs.push_back({
            fint("m", static_cast<long long>(m)),
            freal("S_m", d.S[m]),
            freal("R_m", m >= 1 && m < d.R.size()
                             ? d.R[m]
                             : std::numeric_limits<double>::quiet_NaN()),
            freal("L_m", d.L[m]),
            freal("U_m", d.U[m]),
            freal("c_sq_m", d.c_sq[m]),
            freal("C_tilde_m", sol.coeff[m]),
        });
    }
    write_records(recs, a.out);
    const auto idx = [](std::size_t v) {
        return v == kNoIndex ? std::string("inf") : std::to_string(v);
    };
    std::cerr << "sigma: " << format_real(sol.sigma) << "  M: " << sol.M
              << "  last_valid: " << d.last_valid << "  N1: " << idx(d.N1)
              << "  N2: " << idx(d.N2) << '\n';
    return kExitOk;
}

// --------------------------------------------------------------- coords ----

struct CoordsArgs {
    Problem p;
    OutputArgs out;
    std::vector<std::string> to_cart, to_bisp;
};

int run_coords(const CoordsArgs& a) {
    const AnnulusGeometry g = build_geometry(a.p.n, a.p.r1, a.p.r2, a.p.resolve_t());
    if (a.to_cart.empty() && a.to_bisp.empty())
        throw OutOfRange("coords needs at least one --to-cartesian / --to-bispherical point");
    std::vector<Record> recs;
    const auto push = [&](const std::string& direction, const BisphericalPoint& bp,
                          const std::vector<double>& x) {
        Record rec{ftext("direction", direction), freal("xi", bp.xi),
                   freal("theta", bp.theta)};
        for (std::size_t k = 0; k < bp.phi.size(); ++k)
            rec.push_back(freal("phi_" + std::to_string(k + 1), bp.phi[k]));
        for (std::size_t k = 0; k < x.size(); ++k)
            rec.push_back(freal("x_" + std::to_string(k), x[k]));
        rec.push_back(freal("h", bp.h));
        recs.push_back(std::move(rec));
    };
    for (const std::string& s : a.to_cart) {
        const std::vector<double> v = parse_number_list(s);
        if (v.size() != static_cast<std::size_t>(g.n) + 2)
            throw OutOfRange("--to-cartesian point needs xi, theta and n phi angles");
        const BisphericalPoint bp =
            make_point(g, v[0], v[1], std::vector<double>(v.begin() + 2, v.end()));
        push("to_cartesian", bp, to_cartesian(g, bp));
    }
    for (const std::string& s : a.to_bisp) {
        const std::vector<double> v = parse_number_list(s);
        if (v.size() != static_cast<std::size_t>(g.n) + 2)
            throw OutOfRange("--to-bispherical point needs n+2 cartesian coordinates");
        push("to_bispherical", from_cartesian(g, v), v);
    }
    write_records(recs, a.out);
    return kExitOk;
}

// --------------------------------------------------------------- oracle ----

struct OracleArgs {
    Problem p;
    OutputArgs out;
    double tol = 1e-3;
    std::size_t nxi = 64, ntheta = 64;
    bool concentric = false;
};

int run_oracle(const OracleArgs& a) {
    check_tol(a.tol);
    if (a.concentric) {
        write_records({{
                          fint("n", a.p.n),
                          freal("r1", a.p.r1),
                          freal("r2", a.p.r2),
                          freal("sigma_concentric", concentric_sigma(a.p.n, a.p.r1, a.p.r2)),
                      }},
                      a.out);
        return kExitOk;
    }
    if (!a.p.has_t && !a.p.has_eps)
        throw OutOfRange("oracle needs --t or --eps (or --concentric)");
    if (a.nxi < 32 || a.ntheta < 32)
        throw OutOfRange("oracle grid needs --nxi, --ntheta >= 32");
    const AnnulusGeometry g = build_geometry(a.p.n, a.p.r1, a.p.r2, a.p.resolve_t());
    const SpectralSolution sol = solve_sigma(g);
    const FdSolution coarse = fd_sigma(g, a.nxi, a.ntheta);
    const FdSolution fine = fd_sigma(g, 2 * a.nxi, 2 * a.ntheta);
    const OracleComparison cmp = compare(sol.sigma, coarse, fine, a.tol);
    write_records({{
                      fint("n", g.n),
                      freal("r1", g.r1),
                      freal("r2", g.r2),
                      freal("t", g.t),
                      freal("eps", g.eps),
                      fint("N_xi", static_cast<long long>(a.nxi)),
                      fint("N_theta", static_cast<long long>(a.ntheta)),
                      freal("sigma_spectral", cmp.spectral),
                      freal("sigma_fd_coarse", cmp.fd_coarse),
                      freal("sigma_fd_fine", cmp.fd_fine),
                      freal("sigma_fd_richardson", cmp.fd_richardson),
                      freal("rel_diff", cmp.rel_diff),
                      freal("tolerance", cmp.tolerance),
                      fbool("pass", cmp.pass),
                      fint("fd_iterations", fine.iterations),
                      freal("fd_residual", fine.residual),
                  }},
                  a.out);
    if (!cmp.pass) {
        std::cerr << "check failed: oracle-agreement (rel diff "
                  << format_real(cmp.rel_diff) << " > tol " << format_real(a.tol)
                  << ")\n";
        return kExitCheck;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first Steklov-Dirichlet eigenvalue of eccentric spherical annuli"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "single eigenvalue solve");
    add_problem_options(solve, solve_args.p, true);
    add_output_options(solve, solve_args.out);
    solve->add_option("--tol", solve_args.tol, "truncation doubling tolerance")
        ->capture_default_str();
    solve->add_flag("--oracle", solve_args.oracle, "cross-check against the FD oracle");
    solve->add_option("--oracle-grid", solve_args.oracle_grid,
                      "coarse FD grid (fine grid doubles it)")
        ->capture_default_str();

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "sweep over a t (or eps) grid");
    add_problem_options(sweep, sweep_args.p, false);
    add_output_options(sweep, sweep_args.out);
    sweep->add_option("--tol", sweep_args.tol, "truncation doubling tolerance")
        ->capture_default_str();
    sweep->add_option("--t-grid", sweep_args.t_grid, "t grid start:stop:step");
    sweep->add_option("--eps-grid", sweep_args.eps_grid, "eps grid start:stop:step");
    sweep->add_option("--jobs", sweep_args.jobs, "concurrent solves")
        ->capture_default_str();
    sweep->add_flag("--fd", sweep_args.fd, "also run the FD route per point");
    sweep->add_option("--fd-grid", sweep_args.fd_grid, "FD grid for --fd")
        ->capture_default_str();

    LimitArgs limit_args;
    auto* limit = app.add_subcommand("limit", "touching-limit study over an eps list");
    add_problem_options(limit, limit_args.p, false);
    add_output_options(limit, limit_args.out);
    limit->add_option("--tol", limit_args.tol, "margin tolerance")->capture_default_str();
    limit->add_option("--eps-list", limit_args.eps_list, "comma-separated eps values")
        ->capture_default_str();

    DiagArgs diag_args;
    auto* diag = app.add_subcommand("diag", "recursion diagnostics dump");
    add_problem_options(diag, diag_args.p, true);
    add_output_options(diag, diag_args.out);
    diag->add_option("--tol", diag_args.tol, "truncation doubling tolerance")
        ->capture_default_str();
    diag->add_option("--mmax", diag_args.mmax, "largest m row")->capture_default_str();

    CoordsArgs coords_args;
    auto* coords = app.add_subcommand("coords", "convert points between charts");
    add_problem_options(coords, coords_args.p, true);
    add_output_options(coords, coords_args.out);
    coords->add_option("--to-cartesian", coords_args.to_cart,
                       "bispherical point xi,theta,phi1,...");
    coords->add_option("--to-bispherical", coords_args.to_bisp,
                       "cartesian point x0,...,x_{n+1}");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "finite-difference cross-check");
    add_problem_options(oracle, oracle_args.p, false);
    add_output_options(oracle, oracle_args.out);
    oracle->add_option("--tol", oracle_args.tol, "comparison tolerance")
        ->capture_default_str();
    oracle->add_option("--nxi", oracle_args.nxi, "coarse grid in xi")
        ->capture_default_str();
    oracle->add_option("--ntheta", oracle_args.ntheta, "coarse grid in theta")
        ->capture_default_str();
    oracle->add_flag("--concentric", oracle_args.concentric,
                     "emit the concentric closed form instead of FD");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // the vector overload wants reversed args
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const Error& e) {
        return report_error(e);
    }

    try {
        if (app.got_subcommand(solve)) return run_solve(solve_args);
        if (app.got_subcommand(sweep)) return run_sweep(sweep_args);
        if (app.got_subcommand(limit)) return run_limit(limit_args);
        if (app.got_subcommand(diag)) return run_diag(diag_args);
        if (app.got_subcommand(coords)) return run_coords(coords_args);
        if (app.got_subcommand(oracle)) return run_oracle(oracle_args);
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitConfig;
}
