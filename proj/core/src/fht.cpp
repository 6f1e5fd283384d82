#include "finhilb/fht.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "finhilb/errors.hpp"
#include "finhilb/quadrature.hpp"

namespace finhilb {

FhtInput FhtInput::from_grid(GridFunction f) {
    const int n = f.size();
    if (n < 1) throw std::invalid_argument("fht: empty grid");
    const auto s = cheb_sines(n);
    GridFunction g;
    g.values.resize(n);
    for (int j = 0; j < n; ++j) {
        const double v = f.values[j] * s[j];
        if (!std::isfinite(v)) throw std::invalid_argument("fht: non-finite weighted sample");
        g.values[j] = v;
    }
    ChebSeries series = analyze_T(g);
    return FhtInput(std::move(f), std::move(series));
}

FhtInput FhtInput::from_function(const std::function<double(double)>& f, int n) {
    return from_grid(GridFunction::sample(f, n));
}

ChebSeries fht_coeff_map(const ChebSeries& a) {
    if (a.basis() != Basis::FirstKind)
        throw std::invalid_argument("fht_coeff_map: expects a first-kind series");
    std::vector<double> out;
    if (a.size() > 1) out.assign(a.coeffs().begin() + 1, a.coeffs().end());
    return ChebSeries(Basis::SecondKind, std::move(out));
}

ChebSeries fht_series(const FhtInput& in, const FhtOptions& opts) {
    const TailDiagnostic d = tail_diagnostic(in.weighted_series(), opts.tail_tol);
    if (!d.ok && opts.enforce_tail) throw resolution_error(d.ratio, opts.tail_tol);
    return fht_coeff_map(in.weighted_series());
}

GridFunction fht_apply(const FhtInput& in, const FhtOptions& opts) {
    return synth_grid(fht_series(in, opts), in.grid().size());
}

GridFunction fht_apply(const GridFunction& f, const FhtOptions& opts) {
    return fht_apply(FhtInput::from_grid(f), opts);
}

double fht_quadrature_oracle(const std::function<double(double)>& f, double x, int n) {
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("fht_quadrature_oracle: x must be interior");
    if (n < 8) throw std::invalid_argument("fht_quadrature_oracle: quadrature too small");
    const double psi = std::acos(x);
    const double sin_psi = std::sin(psi);
    const double g_psi = f(x) * sin_psi;
    if (!std::isfinite(g_psi)) throw oracle_failure("fht_quadrature_oracle: f not finite at x");

    auto integrand = [&](double theta) {
        const double c = std::cos(theta);
        const double dc = c - x;
        if (std::fabs(theta - psi) < 1e-9) {
            // difference quotient degenerates; use G'(psi)/(-sin psi)
            const double h = 1e-6;
            const double gp = (f(std::cos(psi + h)) * std::sin(psi + h) -
                               f(std::cos(psi - h)) * std::sin(psi - h)) /
                              (2.0 * h);
            return -gp / sin_psi;
        }
        return (f(c) * std::sin(theta) - g_psi) / dc;
    };

    // Equal-size panels meeting at psi: no node lands on the singular point
    // and the Gauss weights vanish toward the panel ends where the quotient
    // is least accurate.
    const int half = n / 2;
    const double pi = std::acos(-1.0);
    const double v = gl_integrate(integrand, 0.0, psi, half) +
                     gl_integrate(integrand, psi, pi, half);
    if (!std::isfinite(v)) throw oracle_failure("fht_quadrature_oracle: integral diverged");
    return v / pi;
}

ParsevalReport parseval_check(const FhtInput& in, double a0_tol) {
    const double pi = std::acos(-1.0);
    ParsevalReport r;
    r.a0 = in.a0();
    r.rhs = weighted_norm_sq(in.grid(), Weight::Sqrt);
    FhtOptions opts;
    opts.enforce_tail = false;
    const GridFunction hf = fht_apply(in, opts);
    r.lhs = weighted_norm_sq(hf, Weight::Sqrt);
    if (std::fabs(r.a0) > a0_tol) {
        throw mean_value_error(r.a0, r.lhs, r.rhs, r.rhs - pi * r.a0 * r.a0);
    }
    r.rel_gap = (r.rhs > 0.0) ? std::fabs(r.lhs - r.rhs) / r.rhs : std::fabs(r.lhs - r.rhs);
    return r;
}

double nullspace_residual(double c, int n) {
    const auto s = cheb_sines(n);
    GridFunction f;
    f.values.resize(n);
    for (int j = 0; j < n; ++j) f.values[j] = c / s[j];
    FhtOptions opts;
    opts.enforce_tail = false;
    const GridFunction hf = fht_apply(FhtInput::from_grid(std::move(f)), opts);
    return std::sqrt(weighted_norm_sq(hf, Weight::Sqrt));
}

double outer_transform(const GridFunction& f, double x) {
    if (!(std::fabs(x) > 1.0)) throw std::domain_error("outer_transform: |x| must exceed 1");
    const int n = f.size();
    const auto nodes = cheb_nodes(n);
    const auto s = cheb_sines(n);
    // (1/pi) * (pi/n) sum f_j sqrt(1-x_j^2)/(x-x_j)
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += f.values[j] * s[j] / (x - nodes[j]);
    return acc / n;
}

double bump(double x, double width) {
    const double u = x / width;
    const double r = 1.0 - u * u;
    if (r <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / r);
}

double bump_deriv(double x, double width) {
    const double u = x / width;
    const double r = 1.0 - u * u;
    if (r <= 0.0) return 0.0;
    return bump(x, width) * (-2.0 * u / (width * r * r));
}

ProbeReport lower_bound_probe(const std::function<double(double)>& f,
                              const std::function<double(double)>& df, double width) {
    if (!(width > 0.0) || width > 1.0)
        throw std::invalid_argument("lower_bound_probe: width must lie in (0,1]");
    const double pi = std::acos(-1.0);
    auto f2 = [&](double y) { const double v = f(y); return v * v; };
    auto df2 = [&](double y) { const double v = df(y); return v * v; };
    // Two panels split at 0 so the quadrature sees the support edges cleanly.
    const double inner_sq = gl_integrate(f2, -width, 0.0, 200) + gl_integrate(f2, 0.0, width, 200);
    const double deriv_sq = gl_integrate(df2, -width, 0.0, 200) + gl_integrate(df2, 0.0, width, 200);
    if (!(inner_sq > 0.0)) throw std::invalid_argument("lower_bound_probe: f vanishes identically");
    auto hf = [&](double x) {
        auto k = [&](double y) { return f(y) / (x - y); };
        return (gl_integrate(k, -width, 0.0, 200) + gl_integrate(k, 0.0, width, 200)) / pi;
    };
    auto hf2 = [&](double x) { const double v = hf(x); return v * v; };
    const double outer_sq = gl_integrate(hf2, 2.0, 3.0, 64);

    ProbeReport r;
    r.width = width;
    r.inner_norm = std::sqrt(inner_sq);
    r.deriv_norm = std::sqrt(deriv_sq);
    r.outer_norm = std::sqrt(outer_sq);
    r.log_ratio = std::log(r.inner_norm / r.outer_norm);
    return r;
}

ProbeReport lower_bound_probe(double width) {
    auto f = [width](double y) { return bump(y, width); };
    auto df = [width](double y) { return bump_deriv(y, width); };
    return lower_bound_probe(f, df, width);
}

}  // namespace finhilb
