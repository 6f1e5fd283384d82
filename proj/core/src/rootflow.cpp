#include "finhilb/rootflow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "finhilb/cheb.hpp"
#include "finhilb/errors.hpp"
#include "finhilb/fht.hpp"

namespace finhilb {

namespace {

constexpr int kMinGrid = 8;

std::vector<double> uniform_grid(int m) {
    std::vector<double> x(m);
    const double h = 2.0 / (m - 1);
    for (int i = 0; i < m; ++i) x[i] = -1.0 + i * h;
    x[m - 1] = 1.0;
    return x;
}

DensityProfile profile_from_cdf(int m, const std::function<double(double)>& cdf) {
    if (m < kMinGrid) throw std::invalid_argument("profile: grid too small");
    DensityProfile d;
    d.grid = uniform_grid(m);
    d.u.resize(m);
    const double h = 2.0 / (m - 1);
    for (int i = 0; i < m; ++i) {
        const double a = std::max(d.grid[i] - 0.5 * h, -1.0);
        const double b = std::min(d.grid[i] + 0.5 * h, 1.0);
        d.u[i] = (cdf(b) - cdf(a)) / (b - a);
    }
    return d;
}

// support as one interval of indices with u above the threshold;
// {-1, -1} when empty
std::pair<int, int> support_interval(const std::vector<double>& u, double thresh) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(u.size()); ++i) {
        if (u[i] > thresh) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    return {lo, hi};
}

// Steffen's monotone cubic slopes for data on a uniform grid
std::vector<double> steffen_slopes(const std::vector<double>& c, double h) {
    const int m = static_cast<int>(c.size());
    std::vector<double> s(m - 1), d(m);
    for (int i = 0; i + 1 < m; ++i) s[i] = (c[i + 1] - c[i]) / h;
    d[0] = s[0];
    d[m - 1] = s[m - 2];
    for (int i = 1; i + 1 < m; ++i) {
        if (s[i - 1] * s[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double p = 0.5 * (s[i - 1] + s[i]);
            const double lim = 2.0 * std::min(std::fabs(s[i - 1]), std::fabs(s[i]));
            d[i] = std::copysign(std::min(std::fabs(p), lim), s[i]);
        }
    }
    return d;
}

// derivative of the Hermite cubic of (c, slopes) at x inside cell i
double hermite_deriv(const std::vector<double>& c, const std::vector<double>& slopes, double h,
                     int i, double x, double x_left) {
    const double xi = (x - x_left) / h;
    const double sec = (c[i + 1] - c[i]) / h;
    return 6.0 * xi * (1.0 - xi) * sec + slopes[i] * (1.0 - xi) * (1.0 - 3.0 * xi) +
           slopes[i + 1] * xi * (3.0 * xi - 2.0);
}

}  // namespace

DensityProfile arcsine_profile(int m) {
    return profile_from_cdf(m, [](double x) { return arcsine_cdf(x); });
}

DensityProfile semicircle_profile(int m) {
    const double pi = std::acos(-1.0);
    return profile_from_cdf(m, [pi](double x) {
        const double c = std::clamp(x, -1.0, 1.0);
        return 0.5 + (c * std::sqrt(1.0 - c * c) + std::asin(c)) / pi;
    });
}

double trapezoid_mass(const DensityProfile& d) {
    const int m = d.size();
    const double h = 2.0 / (m - 1);
    double acc = 0.5 * (d.u[0] + d.u[m - 1]);
    for (int i = 1; i + 1 < m; ++i) acc += d.u[i];
    return acc * h;
}

std::vector<double> hilbert_of_density(const DensityProfile& d, int cheb_n) {
    const int m = d.size();
    if (m < kMinGrid) throw std::invalid_argument("hilbert_of_density: grid too small");
    if (cheb_n < 16) throw std::invalid_argument("hilbert_of_density: resolution too small");
    const double h = 2.0 / (m - 1);

    // cumulative mass, then its monotone cubic derivative at Chebyshev nodes
    std::vector<double> cum(m);
    cum[0] = 0.0;
    for (int i = 1; i < m; ++i) cum[i] = cum[i - 1] + 0.5 * h * (d.u[i - 1] + d.u[i]);
    const std::vector<double> slopes = steffen_slopes(cum, h);

    const auto nodes = cheb_nodes(cheb_n);
    GridFunction f;
    f.values.resize(cheb_n);
    for (int j = 0; j < cheb_n; ++j) {
        const double x = nodes[j];
        int cell = static_cast<int>((x + 1.0) / h);
        cell = std::clamp(cell, 0, m - 2);
        f.values[j] = hermite_deriv(cum, slopes, h, cell, x, d.grid[cell]);
    }

    const FhtInput in = FhtInput::from_grid(std::move(f));
    const TailDiagnostic td = tail_diagnostic(in.weighted_series(), 1e-2);
    if (!td.ok) throw resolution_error(td.ratio, 1e-2);
    FhtOptions opts;
    opts.enforce_tail = false;  // front kinks shed tail mass above 1e-8; tolerated
    const ChebSeries b = fht_series(in, opts);

    // interval operator uses the 1/(y-x) kernel; the density convention is
    // the Stieltjes one, hence the sign flip
    std::vector<double> hu(m);
    for (int i = 0; i < m; ++i) hu[i] = -synth(b, d.grid[i]);
    return hu;
}

std::vector<double> flux(const DensityProfile& d, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("flux: eps must be positive");
    const int m = d.size();
    const double pi = std::acos(-1.0);
    const std::vector<double> hu = hilbert_of_density(d);
    const auto [lo, hi] = support_interval(d.u, 10.0 * eps);
    std::vector<double> phi(m);
    for (int i = 0; i < m; ++i) {
        if (lo >= 0 && i >= lo && i <= hi)
            phi[i] = std::atan(hu[i] / std::max(d.u[i], eps)) / pi;
        else if (lo < 0)
            phi[i] = (d.grid[i] < 0.0) ? -0.5 : 0.5;
        else
            phi[i] = (i < lo) ? -0.5 : 0.5;
    }
    return phi;
}

DensityProfile step(const DensityProfile& d, double dt, double eps, StepDiagnostics* diag) {
    const int m = d.size();
    if (m < kMinGrid) throw std::invalid_argument("step: grid too small");
    const double h = 2.0 / (m - 1);
    if (!(dt > 0.0) || dt > h)
        throw std::invalid_argument("step: need 0 < dt <= grid spacing");

    const std::vector<double> phi = flux(d, eps);
    const auto [lo, hi] = support_interval(d.u, 10.0 * eps);

    // face k sits between nodes k-1 and k; faces 0 and m are the domain
    // boundary.  Everything outside the support drains outward at the
    // saturated rate, so the total mass rate telescopes to -1.
    std::vector<double> face(m + 1);
    face[0] = -0.5;
    face[m] = 0.5;
    for (int k = 1; k < m; ++k) {
        if (lo < 0 || k <= lo)
            face[k] = -0.5;
        else if (k > hi)
            face[k] = 0.5;
        else
            face[k] = 0.5 * (phi[k - 1] + phi[k]);
    }

    DensityProfile out = d;
    out.t = d.t + dt;
    double clipped = 0.0;
    for (int i = 0; i < m; ++i) {
        const double w = (i == 0 || i == m - 1) ? 0.5 * h : h;
        double v = d.u[i] - dt * (face[i + 1] - face[i]) / w;
        if (v < 0.0) {
            clipped += -v * w;
            v = 0.0;
        }
        out.u[i] = v;
    }
    const double mb = trapezoid_mass(d);
    const double ma = trapezoid_mass(out);
    if (mb - ma > 10.0 * dt) throw instability_error(mb - ma, dt);
    if (diag) {
        diag->mass_before = mb;
        diag->mass_after = ma;
        diag->clipped_mass = clipped;
    }
    return out;
}

DensityProfile evolve(DensityProfile d, double t_final, double dt) {
    if (t_final < d.t - 1e-12) throw std::invalid_argument("evolve: target before current time");
    while (d.t < t_final - 0.5 * dt) {
        const double umax = *std::max_element(d.u.begin(), d.u.end());
        const double eps = (umax > 0.0) ? 1e-8 * umax : 1e-16;
        d = step(d, dt, eps);
    }
    return d;
}

double profile_cdf(const DensityProfile& d, double x) {
    const int m = d.size();
    const double h = 2.0 / (m - 1);
    if (x <= d.grid[0]) return 0.0;
    std::vector<double> cum(m);
    cum[0] = 0.0;
    for (int i = 1; i < m; ++i) cum[i] = cum[i - 1] + 0.5 * h * (d.u[i - 1] + d.u[i]);
    const double total = cum[m - 1];
    if (!(total > 0.0)) throw std::invalid_argument("profile_cdf: empty profile");
    if (x >= d.grid[m - 1]) return 1.0;
    int cell = std::clamp(static_cast<int>((x + 1.0) / h), 0, m - 2);
    const double s = (x - d.grid[cell]) / h;
    const double u_at = d.u[cell] + s * (d.u[cell + 1] - d.u[cell]);
    const double partial = (x - d.grid[cell]) * 0.5 * (d.u[cell] + u_at);
    return (cum[cell] + partial) / total;
}

double compare_to_empirical(WeightId weight, double t, int n, int m_grid, double dt) {
    if (n < 2) throw std::invalid_argument("compare_to_empirical: degree too small");
    if (!(t >= 0.0 && t < 1.0))
        throw std::invalid_argument("compare_to_empirical: t outside [0, 1)");
    const int k = static_cast<int>(std::llround(t * n));
    if (k >= n) throw std::invalid_argument("compare_to_empirical: derivative order exhausts degree");

    RootSet rs;
    switch (weight) {
        case WeightId::Chebyshev:
            rs = roots_via_jacobi(chebyshev_recurrence(n), n);
            break;
        case WeightId::Legendre:
            rs = roots_via_jacobi(legendre_recurrence(n), n);
            break;
        case WeightId::Hermite:
            rs = roots_via_jacobi(hermite_recurrence(n), n);
            break;
    }
    rs = iterate_derivatives(std::move(rs), k);
    if (weight == WeightId::Hermite) {
        const double scale = 1.0 / std::sqrt(2.0 * n);
        for (double& r : rs.roots) r *= scale;
    }
    std::sort(rs.roots.begin(), rs.roots.end());

    DensityProfile d =
        (weight == WeightId::Hermite) ? semicircle_profile(m_grid) : arcsine_profile(m_grid);
    d = evolve(std::move(d), t, dt);
    return ks_distance(rs.roots, [&](double x) { return profile_cdf(d, x); });
}

}  // namespace finhilb
