#include "finhilb/circle.hpp"

#include <cmath>
#include <stdexcept>

#include "finhilb/errors.hpp"
#include "transforms.hpp"

namespace finhilb {

namespace {

bool power_of_two(int m) { return m >= 2 && (m & (m - 1)) == 0; }

void require_grid(int m) {
    if (!power_of_two(m)) throw std::invalid_argument("circle: grid size must be a power of two");
}

// Limit of f(cos t)*|sin t| approaching a zero of sin.  Near a pole the
// product looks like c0 + c1|s| + c2 s^2 (the |s| kink comes from bounded f,
// the smooth-even part from weighted-family f), so the one-sided three-point
// fit 3g(d) - 3g(2d) + g(3d) reproduces c0 exactly for that basis.  The
// offset is kept large enough that the cancellation inside a caller's
// 1/sqrt(1-x^2) (relative ~eps/d^2) stays below the fit's own d^3..d^4 bias.
// Exact for the arcsine-weight family, whose product is constant here.
double pole_value(const std::function<double(double)>& f, double pole) {
    const double d = 5e-4;
    auto at = [&](double s) {
        const double t = (pole == 0.0) ? s : pole + s;
        return f(std::cos(t)) * std::fabs(std::sin(t));
    };
    return 3.0 * at(d) - 3.0 * at(2.0 * d) + at(3.0 * d);
}

}  // namespace

std::vector<double> circle_angles(int m) {
    require_grid(m);
    const double pi = std::acos(-1.0);
    std::vector<double> th(m);
    for (int j = 0; j < m; ++j) th[j] = -pi + 2.0 * pi * j / m;
    return th;
}

CircleFunction lift(const std::function<double(double)>& f, int m) {
    require_grid(m);
    const double pi = std::acos(-1.0);
    CircleFunction g;
    g.values.assign(m, 0.0);
    // j = 0 is theta = -pi, j = m/2 is theta = 0; fill the negative-theta half
    // and mirror so g is even on the grid exactly.
    g.values[0] = pole_value(f, -pi);
    g.values[m / 2] = pole_value(f, 0.0);
    for (int j = 1; j < m / 2; ++j) {
        const double th = -pi + 2.0 * pi * j / m;
        const double v = f(std::cos(th)) * std::fabs(std::sin(th));
        if (!std::isfinite(v)) throw std::invalid_argument("lift: unbounded sample on the grid");
        g.values[j] = v;
        g.values[m - j] = v;
    }
    return g;
}

double circle_mean(const CircleFunction& g) {
    double acc = 0.0;
    for (double v : g.values) acc += v;
    return acc / g.size();
}

CircleFunction conjugate(const CircleFunction& g) {
    const int m = g.size();
    require_grid(m);
    std::vector<double> hc = detail::r2hc(g.values);
    // halfcomplex layout: hc[0] DC, hc[k] / hc[m-k] real/imag pairs, hc[m/2]
    // Nyquist.  Multiplier -i per positive mode: (R, I) -> (I, -R).
    std::vector<double> out(m);
    out[0] = 0.0;
    out[m / 2] = 0.0;
    for (int k = 1; k < m / 2; ++k) {
        out[k] = hc[m - k];
        out[m - k] = -hc[k];
    }
    std::vector<double> v = detail::hc2r(out);
    CircleFunction r;
    r.values.resize(m);
    for (int j = 0; j < m; ++j) r.values[j] = v[j] / m;
    return r;
}

double conjugate_at(const CircleFunction& g, double theta) {
    const int m = g.size();
    require_grid(m);
    std::vector<double> hc = detail::r2hc(g.values);
    // The grid starts at -pi, so mode n of the interpolant carries a (-1)^n
    // factor relative to the DFT bin:
    //   c_n = (2/m)(-1)^n R_n,  s_n = -(2/m)(-1)^n I_n,
    // and conjugation sends (c, s) -> (-s, c).
    double acc = 0.0;
    double sign = -1.0;  // (-1)^n starting at n = 1
    for (int n = 1; n < m / 2; ++n) {
        acc += sign * (hc[m - n] * std::cos(n * theta) + hc[n] * std::sin(n * theta));
        sign = -sign;
    }
    return 2.0 * acc / m;
}

double fht_via_circle(const std::function<double(double)>& f, double psi, int m,
                      double endpoint_guard) {
    const double pi = std::acos(-1.0);
    if (!(psi > 0.0 && psi < pi)) throw std::domain_error("fht_via_circle: psi outside (0, pi)");
    const double s = std::sin(psi);
    if (psi < endpoint_guard || pi - psi < endpoint_guard)
        throw near_endpoint_error(psi, 1.0 / s);
    const CircleFunction g = lift(f, m);
    return conjugate_at(g, psi) / s;
}

}  // namespace finhilb
