// finhilb: drive the interval-transform experiments from the command line.
//
// Exit codes: 0 all checks passed, 1 numerical threshold breach or numerical
// failure, 2 usage error.  Output files embed the resolved configuration and
// contain nothing run-dependent (timings go to the terminal, never into a
// file), so identical configurations produce byte-identical files.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finhilb/airfoil.hpp"
#include "finhilb/cheb.hpp"
#include "finhilb/circle.hpp"
#include "finhilb/errors.hpp"
#include "finhilb/fht.hpp"
#include "finhilb/roots.hpp"
#include "finhilb/rootflow.hpp"

using nlohmann::ordered_json;
using namespace finhilb;

namespace {

constexpr int kExitThreshold = 1;
constexpr int kExitUsage = 2;

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const ordered_json& config, const Table& t) {
    os << "# config: " << config.dump() << "\n";
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            os << sci(row[i]) << (i + 1 < row.size() ? "," : "\n");
}

// Emit a table (plus optional extra summary fields) in the requested format.
// With --out the table goes to the file and `summary` to stdout; without it
// the table itself claims stdout and the summary moves to stderr so stdout
// stays machine-readable.
int emit(const std::string& out, const std::string& format, const ordered_json& config,
         const Table& table, const ordered_json& summary) {
    ordered_json blob;
    if (format == "json") {
        blob["config"] = config;
        for (auto& [k, v] : summary.items()) blob[k] = v;
        ordered_json cols = ordered_json::object();
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            ordered_json col = ordered_json::array();
            for (const auto& row : table.rows) col.push_back(row[c]);
            cols[table.header[c]] = col;
        }
        blob["columns"] = cols;
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "finhilb: cannot open output file: " << out << "\n";
            return kExitUsage;
        }
        if (format == "json")
            f << blob.dump(2) << "\n";
        else
            write_csv(f, config, table);
        if (!summary.empty()) std::cout << summary.dump(2) << "\n";
    } else {
        if (format == "json")
            std::cout << blob.dump(2) << "\n";
        else
            write_csv(std::cout, config, table);
        if (!summary.empty() && format != "json") std::cerr << summary.dump(2) << "\n";
    }
    return 0;
}

std::vector<double> ascending_nodes(int n) {
    auto x = cheb_nodes(n);
    std::reverse(x.begin(), x.end());
    return x;
}

// ---- transform ------------------------------------------------------------

struct TransformArgs {
    std::string selector = "tk";
    int n = 512;
    int k = 1;
    double c = 1.0;
    double width = 0.5;
    std::string file;
    std::string out;
    std::string format = "csv";
};

int run_transform(const TransformArgs& a) {
    const auto xs = ascending_nodes(a.n);
    GridFunction f;
    f.values.resize(a.n);
    const auto nodes = cheb_nodes(a.n);
    const auto sines = cheb_sines(a.n);
    if (a.selector == "null-family") {
        for (int j = 0; j < a.n; ++j) f.values[j] = a.c / sines[j];
    } else if (a.selector == "tk") {
        for (int j = 0; j < a.n; ++j)
            f.values[j] = std::cos(a.k * std::acos(nodes[j])) / sines[j];
    } else if (a.selector == "indicator") {
        f.values.assign(a.n, 1.0);
    } else if (a.selector == "bump") {
        for (int j = 0; j < a.n; ++j) f.values[j] = bump(nodes[j], a.width);
    } else {  // sample
        std::ifstream in(a.file);
        if (!in) {
            std::cerr << "finhilb: cannot read sample file: " << a.file << "\n";
            return kExitUsage;
        }
        std::vector<double> vals;
        double v;
        while (in >> v) vals.push_back(v);
        if (static_cast<int>(vals.size()) != a.n) {
            std::cerr << "finhilb: sample file holds " << vals.size() << " values, need n="
                      << a.n << "\n";
            return kExitUsage;
        }
        // file rows are ascending in x; internal node order is descending
        for (int j = 0; j < a.n; ++j) f.values[j] = vals[a.n - 1 - j];
    }

    const GridFunction hf = fht_apply(FhtInput::from_grid(f));

    ordered_json config{{"command", "transform"}, {"selector", a.selector}, {"n", a.n},
                        {"k", a.k},               {"c", a.c},              {"width", a.width},
                        {"file", a.file},         {"format", a.format}};
    Table t;
    t.header = {"x", "f", "Hf"};
    for (int i = 0; i < a.n; ++i) {
        const int j = a.n - 1 - i;  // ascending x
        t.rows.push_back({xs[i], f.values[j], hf.values[j]});
    }
    return emit(a.out, a.format, config, t, ordered_json::object());
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    int trials = 100;
    int n = 256;
    int degree = 200;
    std::uint64_t seed = 12345;
    double tol = 1e-10;
    double null_tol = 1e-10;
    double circle_tol = 1e-8;
    bool a0_violation = false;
    std::string out;
};

GridFunction weighted_series_grid(const std::vector<double>& coeffs, int n) {
    const GridFunction g = synth_grid(ChebSeries(Basis::FirstKind, coeffs), n);
    const auto sines = cheb_sines(n);
    GridFunction f;
    f.values.resize(n);
    for (int j = 0; j < n; ++j) f.values[j] = g.values[j] / sines[j];
    return f;
}

int run_verify(const VerifyArgs& a) {
    double max_rel_gap = 0.0;
    std::uint64_t worst_seed = a.seed;
    for (int trial = 0; trial < a.trials; ++trial) {
        const std::uint64_t trial_seed = a.seed + trial;
        std::mt19937_64 rng(trial_seed);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        std::vector<double> c(a.degree + 1, 0.0);
        for (int k = 1; k <= a.degree; ++k) c[k] = uni(rng);
        const ParsevalReport r = parseval_check(FhtInput::from_grid(
            weighted_series_grid(c, std::max(a.n, a.degree + 1))));
        if (r.rel_gap > max_rel_gap) {
            max_rel_gap = r.rel_gap;
            worst_seed = trial_seed;
        }
    }

    double max_null = 0.0;
    for (double c : {1.0, -1.0, 1e3, -1e3, 1e-3, -1e-3})
        max_null = std::max(max_null, nullspace_residual(c) / std::fabs(c));

    double max_circle = 0.0;
    {
        std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> c(31);
            for (auto& v : c) v = uni(rng);
            const ChebSeries cs(Basis::FirstKind, c);
            const ChebSeries u = fht_coeff_map(cs);
            auto f = [&cs](double x) { return synth(cs, x) / std::sqrt(1.0 - x * x); };
            for (int i = 1; i <= 9; ++i) {
                const double psi = i * std::acos(-1.0) / 10.0;
                max_circle = std::max(
                    max_circle, std::fabs(fht_via_circle(f, psi) - synth(u, std::cos(psi))));
            }
        }
    }

    ordered_json config{{"command", "verify"},   {"trials", a.trials}, {"n", a.n},
                        {"degree", a.degree},    {"seed", a.seed},     {"tol", a.tol},
                        {"null_tol", a.null_tol}, {"circle_tol", a.circle_tol},
                        {"a0_violation", a.a0_violation}};
    ordered_json report;
    report["config"] = config;
    report["parseval"] = {{"trials", a.trials}, {"max_rel_gap", max_rel_gap}};
    report["nullspace"] = {{"max_residual", max_null}};
    report["circle_consistency"] = {{"max_abs_gap", max_circle}};

    bool pass = max_rel_gap <= a.tol && max_null <= a.null_tol && max_circle <= a.circle_tol;

    if (a.a0_violation) {
        // run one deliberately non-mean-zero trial through the corrected identity
        std::vector<double> c(a.degree + 1, 0.0);
        c[0] = 0.7;
        c[1] = 1.0;
        double corrected_gap = -1.0;
        ordered_json v;
        try {
            parseval_check(FhtInput::from_grid(weighted_series_grid(c, a.n)));
        } catch (const mean_value_error& e) {
            corrected_gap = std::fabs(e.lhs - e.corrected_rhs) / std::max(1.0, e.lhs);
            v = {{"a0", e.a0},
                 {"lhs", e.lhs},
                 {"rhs", e.rhs},
                 {"corrected_rhs", e.corrected_rhs},
                 {"corrected_rel_gap", corrected_gap}};
        }
        report["a0_violation"] = v;
        pass = pass && corrected_gap >= 0.0 && corrected_gap <= a.tol;
    }

    report["pass"] = pass;
    if (!pass) report["offending_seed"] = worst_seed;

    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) {
            std::cerr << "finhilb: cannot open output file: " << a.out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return pass ? 0 : kExitThreshold;
}

// ---- roots ----------------------------------------------------------------

struct RootsArgs {
    std::string weight = "chebyshev";
    int n = 100;
    double alpha = 0.0;
    double beta = 0.0;
    int q = 0;
    std::string out;
    std::string format = "csv";
};

int run_roots(const RootsArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    RootSet rs;
    if (a.weight == "chebyshev") {
        rs = roots_via_jacobi(chebyshev_recurrence(a.n), a.n);
    } else if (a.weight == "legendre") {
        rs = roots_via_jacobi(legendre_recurrence(a.n), a.n);
    } else if (a.weight == "hermite") {
        rs = hermite_roots(a.n);
    } else {  // jacobi
        const double al = a.alpha, be = a.beta;
        auto w = [al, be](double x) {
            return std::pow(1.0 - x, al) * std::pow(1.0 + x, be);
        };
        rs = roots_via_jacobi(recurrence_from_weight(w, a.n, a.q), a.n);
    }
    const double ks = ks_to_arcsine(rs);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json config{{"command", "roots"}, {"weight", a.weight}, {"n", a.n},
                        {"alpha", a.alpha},   {"beta", a.beta},     {"q", a.q},
                        {"format", a.format}};
    Table t;
    t.header = {"root"};
    for (double r : rs.roots) t.rows.push_back({r});
    // runtime is terminal-only so files stay reproducible
    ordered_json summary{{"n", a.n}, {"ks_to_arcsine", ks}, {"runtime_seconds", runtime}};
    ordered_json file_summary{{"n", a.n}, {"ks_to_arcsine", ks}};
    const int rc = emit(a.out, a.format, config, t,
                        a.format == "json" ? file_summary : ordered_json::object());
    if (rc != 0) return rc;
    if (!a.out.empty())
        std::cout << summary.dump(2) << "\n";
    else
        std::cerr << summary.dump(2) << "\n";
    return 0;
}

// ---- flow -----------------------------------------------------------------

struct FlowArgs {
    std::string weight = "chebyshev";
    double t = 0.5;
    int n = 400;
    int grid = 512;
    double dt = 1e-3;
    std::string out;
    std::string format = "csv";
};

int run_flow(const FlowArgs& a) {
    const WeightId wid = a.weight == "chebyshev" ? WeightId::Chebyshev
                        : a.weight == "legendre" ? WeightId::Legendre
                                                 : WeightId::Hermite;
    const int k = static_cast<int>(std::llround(a.t * a.n));
    if (k >= a.n) {
        std::cerr << "finhilb: t*n exhausts the polynomial degree\n";
        return kExitUsage;
    }

    RootSet rs;
    if (wid == WeightId::Chebyshev)
        rs = iterate_derivatives(roots_via_jacobi(chebyshev_recurrence(a.n), a.n), k);
    else if (wid == WeightId::Legendre)
        rs = iterate_derivatives(roots_via_jacobi(legendre_recurrence(a.n), a.n), k);
    else {
        rs = iterate_derivatives(roots_via_jacobi(hermite_recurrence(a.n), a.n), k);
        const double scale = 1.0 / std::sqrt(2.0 * a.n);
        for (double& r : rs.roots) r *= scale;
    }

    const DensityProfile start =
        wid == WeightId::Hermite ? semicircle_profile(a.grid) : arcsine_profile(a.grid);
    const DensityProfile evolved = evolve(start, a.t, a.dt);

    auto empirical = [&rs](double x) {
        const auto it = std::upper_bound(rs.roots.begin(), rs.roots.end(), x);
        return static_cast<double>(it - rs.roots.begin()) / rs.roots.size();
    };
    const double ks = ks_distance(rs.roots, [&](double x) { return profile_cdf(evolved, x); });
    const double mass = trapezoid_mass(evolved);
    const double mass_error = std::fabs(mass - (1.0 - a.t));

    ordered_json config{{"command", "flow"}, {"weight", a.weight}, {"t", a.t},
                        {"n", a.n},          {"grid", a.grid},     {"dt", a.dt},
                        {"format", a.format}};
    Table table;
    table.header = {"x", "u", "cdf_pde", "cdf_empirical"};
    for (int i = 0; i < evolved.size(); ++i) {
        const double x = evolved.grid[i];
        table.rows.push_back({x, evolved.u[i], profile_cdf(evolved, x), empirical(x)});
    }
    ordered_json summary{{"ks_pde_vs_empirical", ks},
                         {"mass_error", mass_error},
                         {"mass", mass},
                         {"derivative_order", k}};
    return emit(a.out, a.format, config, table, summary);
}

// ---- airfoil --------------------------------------------------------------

struct AirfoilArgs {
    std::string g = "one";
    double c = 0.0;
    int n = 64;
    double tol = 1e-8;
    std::string file;
    std::string out;
    std::string format = "csv";
};

int run_airfoil(const AirfoilArgs& a) {
    const auto nodes = cheb_nodes(a.n);
    GridFunction g;
    g.values.resize(a.n);
    if (a.g == "one") {
        g.values.assign(a.n, 1.0);
    } else if (a.g == "x") {
        g.values.assign(nodes.begin(), nodes.end());
    } else if (a.g == "xsq") {
        for (int j = 0; j < a.n; ++j) g.values[j] = nodes[j] * nodes[j];
    } else if (a.g == "zero") {
        g.values.assign(a.n, 0.0);
    } else {  // sample
        std::ifstream in(a.file);
        if (!in) {
            std::cerr << "finhilb: cannot read sample file: " << a.file << "\n";
            return kExitUsage;
        }
        std::vector<double> vals;
        double v;
        while (in >> v) vals.push_back(v);
        if (static_cast<int>(vals.size()) != a.n) {
            std::cerr << "finhilb: sample file holds " << vals.size() << " values, need n="
                      << a.n << "\n";
            return kExitUsage;
        }
        for (int j = 0; j < a.n; ++j) g.values[j] = vals[a.n - 1 - j];
    }

    const AirfoilSolution base = airfoil_solve(g, 0.0, a.tol);
    AirfoilSolution shifted = base;
    shifted.null_coefficient = a.c;
    const GridFunction f0 = airfoil_reconstruct(base, a.n);
    const GridFunction fc = airfoil_reconstruct(shifted, a.n);
    const double residual = airfoil_residual(base, g);

    ordered_json config{{"command", "airfoil"}, {"g", a.g},     {"c", a.c},
                        {"n", a.n},             {"tol", a.tol}, {"file", a.file},
                        {"format", a.format}};
    Table t;
    t.header = {"x", "f_c0", "f_c"};
    for (int i = 0; i < a.n; ++i) {
        const int j = a.n - 1 - i;  // ascending x
        t.rows.push_back({nodes[j], f0.values[j], fc.values[j]});
    }
    ordered_json summary{{"residual", residual}, {"null_coefficient", a.c}};
    return emit(a.out, a.format, config, t, summary);
}

// ---- probe ----------------------------------------------------------------

struct ProbeArgs {
    std::vector<double> widths = {1.0, 0.5, 0.25, 0.125};
    std::string out;
    std::string format = "csv";
};

int run_probe(const ProbeArgs& a) {
    ordered_json config{{"command", "probe"}, {"widths", a.widths}, {"format", a.format}};
    Table t;
    t.header = {"width", "inner_norm", "deriv_norm", "outer_norm", "log_ratio"};
    for (double w : a.widths) {
        const ProbeReport r = lower_bound_probe(w);
        t.rows.push_back({r.width, r.inner_norm, r.deriv_norm, r.outer_norm, r.log_ratio});
    }
    return emit(a.out, a.format, config, t, ordered_json::object());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral finite Hilbert transform toolbox"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* t = app.add_subcommand("transform", "evaluate Hf for a catalog function");
    t->add_option("--selector", ta.selector, "function choice")
        ->check(CLI::IsMember({"null-family", "tk", "indicator", "bump", "sample"}));
    t->add_option("--n", ta.n, "grid size")->check(CLI::Range(8, 1 << 20));
    t->add_option("--k", ta.k, "Chebyshev index for tk")->check(CLI::Range(0, 1 << 16));
    t->add_option("--c", ta.c, "null-family coefficient");
    t->add_option("--width", ta.width, "bump width")->check(CLI::Range(1e-6, 1.0));
    t->add_option("--file", ta.file, "sample file (ascending x, one value per row)");
    t->add_option("--out", ta.out, "output path (default stdout)");
    t->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "json"}));

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "identity checks: Parseval, null space, circle");
    v->add_option("--trials", va.trials)->check(CLI::Range(1, 100000));
    v->add_option("--n", va.n)->check(CLI::Range(8, 1 << 20));
    v->add_option("--degree", va.degree)->check(CLI::Range(1, 1 << 16));
    v->add_option("--seed", va.seed, "base seed; trial i uses seed+i");
    v->add_option("--tol", va.tol, "Parseval relative-gap threshold");
    v->add_option("--null-tol", va.null_tol);
    v->add_option("--circle-tol", va.circle_tol);
    v->add_flag("--a0-violation", va.a0_violation,
                "also run a non-mean-zero trial through the corrected identity");
    v->add_option("--out", va.out);

    RootsArgs ra;
    auto* r = app.add_subcommand("roots", "orthogonal polynomial roots and arcsine distance");
    r->add_option("--weight", ra.weight)
        ->check(CLI::IsMember({"chebyshev", "legendre", "jacobi", "hermite"}));
    r->add_option("--n", ra.n, "degree")->check(CLI::Range(1, 100000));
    r->add_option("--alpha", ra.alpha, "jacobi exponent on (1-x)")
        ->check(CLI::Range(-0.999, 100.0));
    r->add_option("--beta", ra.beta, "jacobi exponent on (1+x)")
        ->check(CLI::Range(-0.999, 100.0));
    r->add_option("--q", ra.q, "quadrature size for jacobi (0 = 8n)");
    r->add_option("--out", ra.out);
    r->add_option("--format", ra.format)->check(CLI::IsMember({"csv", "json"}));

    FlowArgs fa;
    auto* fl = app.add_subcommand("flow", "transport PDE vs derivative roots");
    fl->add_option("--weight", fa.weight)
        ->check(CLI::IsMember({"chebyshev", "legendre", "hermite"}));
    fl->add_option("--t", fa.t, "flow time = derivative fraction")
        ->check(CLI::Range(0.0, 0.999));
    fl->add_option("--n", fa.n, "polynomial degree")->check(CLI::Range(2, 100000));
    fl->add_option("--grid", fa.grid, "PDE grid size")->check(CLI::Range(8, 1 << 16));
    fl->add_option("--dt", fa.dt, "time step")->check(CLI::Range(1e-8, 1.0));
    fl->add_option("--out", fa.out);
    fl->add_option("--format", fa.format)->check(CLI::IsMember({"csv", "json"}));

    AirfoilArgs aa;
    auto* af = app.add_subcommand("airfoil", "solve Hf = g up to the null direction");
    af->add_option("--g", aa.g, "right-hand side")
        ->check(CLI::IsMember({"one", "x", "xsq", "zero", "sample"}));
    af->add_option("--c", aa.c, "null coefficient for the second solution column");
    af->add_option("--n", aa.n)->check(CLI::Range(8, 1 << 20));
    af->add_option("--tol", aa.tol, "expansion tail threshold");
    af->add_option("--file", aa.file);
    af->add_option("--out", aa.out);
    af->add_option("--format", aa.format)->check(CLI::IsMember({"csv", "json"}));

    ProbeArgs pa;
    auto* p = app.add_subcommand("probe", "bump-family norm probe");
    p->add_option("--widths", pa.widths, "bump widths in (0,1]")->delimiter(',');
    p->add_option("--out", pa.out);
    p->add_option("--format", pa.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (t->parsed()) return run_transform(ta);
        if (v->parsed()) return run_verify(va);
        if (r->parsed()) return run_roots(ra);
        if (fl->parsed()) return run_flow(fa);
        if (af->parsed()) return run_airfoil(aa);
        if (p->parsed()) return run_probe(pa);
    } catch (const mean_value_error& e) {
        std::cerr << "finhilb: " << e.what() << "\n";
        return kExitThreshold;
    } catch (const std::invalid_argument& e) {
        // library parameter validation: a usage problem, not a numerical one
        std::cerr << "finhilb: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "finhilb: " << e.what() << "\n";
        return kExitThreshold;
    }
    return kExitUsage;
}
