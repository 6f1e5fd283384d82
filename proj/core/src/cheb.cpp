#include "finhilb/cheb.hpp"

#include <cmath>
#include <stdexcept>

#include "transforms.hpp"

namespace finhilb {

ChebSeries::ChebSeries(Basis basis, std::vector<double> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw std::invalid_argument("ChebSeries: non-finite coefficient");
}

std::vector<double> cheb_angles(int n) {
    if (n < 1) throw std::invalid_argument("cheb grid size must be positive");
    std::vector<double> theta(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) theta[j] = (2.0 * j + 1.0) * M_PI / (2.0 * n);
    return theta;
}

std::vector<double> cheb_nodes(int n) {
    if (n < 1) throw std::invalid_argument("cheb grid size must be positive");
    std::vector<double> x(static_cast<std::size_t>(n));
    // Mirror construction keeps x[n-1-j] == -x[j] exactly; middle node of an
    // odd grid is cos(pi/2) = 0.
    for (int j = 0; j < n / 2; ++j) {
        double v = std::cos((2.0 * j + 1.0) * M_PI / (2.0 * n));
        x[j] = v;
        x[n - 1 - j] = -v;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
    return x;
}

std::vector<double> cheb_sines(int n) {
    if (n < 1) throw std::invalid_argument("cheb grid size must be positive");
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n / 2; ++j) {
        double v = std::sin((2.0 * j + 1.0) * M_PI / (2.0 * n));
        s[j] = v;
        s[n - 1 - j] = v;
    }
    if (n % 2 == 1) s[n / 2] = 1.0;
    return s;
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, int n) {
    auto x = cheb_nodes(n);
    std::vector<double> v(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        v[j] = f(x[j]);
        if (!std::isfinite(v[j]))
            throw std::invalid_argument("GridFunction::sample: non-finite value at node");
    }
    return GridFunction(std::move(v));
}

ChebSeries analyze_T(const GridFunction& samples) {
    const int n = samples.size();
    if (n < 1) throw std::invalid_argument("analyze_T: empty grid");
    for (double v : samples.values)
        if (!std::isfinite(v)) throw std::invalid_argument("analyze_T: non-finite sample");
    // T_k(x_j) = cos(k theta_j) with theta_j = (j+1/2)pi/n, so the Gauss-grid
    // analysis sums are a DCT-II:  a_0 = Y_0/(2n), a_k = Y_k/n.
    std::vector<double> y = detail::dct2(samples.values);
    y[0] /= 2.0 * n;
    for (int k = 1; k < n; ++k) y[k] /= n;
    return ChebSeries(Basis::FirstKind, std::move(y));
}

double synth(const ChebSeries& s, double x) {
    if (!(std::fabs(x) <= 1.0))
        throw std::domain_error("synth: |x| > 1 (use outer_transform for the exterior)");
    // Clenshaw for both kinds: b_k = c_k + 2x b_{k+1} - b_{k+2}.
    // T: S = b_0 - x b_1.   U: S = b_0.
    const auto& c = s.coeffs();
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        double b0 = c[i] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    // after the loop b1 = b_0, b2 = b_1
    return s.basis() == Basis::FirstKind ? b1 - x * b2 : b1;
}

GridFunction synth_grid(const ChebSeries& s, int n) {
    if (n < 1) throw std::invalid_argument("synth_grid: grid size must be positive");
    const auto& c = s.coeffs();
    if (static_cast<int>(c.size()) > n) {
        // more coefficients than grid points: no aliasing-free transform path
        auto x = cheb_nodes(n);
        std::vector<double> v(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) v[j] = synth(s, x[j]);
        return GridFunction(std::move(v));
    }
    std::vector<double> in(static_cast<std::size_t>(n), 0.0);
    if (s.basis() == Basis::FirstKind) {
        if (!c.empty()) in[0] = c[0];
        for (std::size_t k = 1; k < c.size(); ++k) in[k] = c[k] / 2.0;
        return GridFunction(detail::dct3(in));
    }
    // U series: sum_k c_k sin((k+1)theta_j) / sin(theta_j) via DST-III.
    for (std::size_t k = 0; k < c.size(); ++k)
        in[k] = (static_cast<int>(k) == n - 1) ? c[k] : c[k] / 2.0;
    std::vector<double> v = detail::dst3(in);
    auto sines = cheb_sines(n);
    for (int j = 0; j < n; ++j) v[j] /= sines[j];
    return GridFunction(std::move(v));
}

double gauss_cheb_quad(const GridFunction& samples) {
    const int n = samples.size();
    if (n < 1) throw std::invalid_argument("gauss_cheb_quad: empty grid");
    const auto& v = samples.values;
    // Mirror-paired summation: odd integrands cancel term by term.
    double acc = 0.0;
    for (int j = 0; j < n / 2; ++j) acc += v[j] + v[n - 1 - j];
    if (n % 2 == 1) acc += v[n / 2];
    return M_PI / n * acc;
}

double weighted_norm_sq(const GridFunction& f, Weight w) {
    const int n = f.size();
    if (n < 1) throw std::invalid_argument("weighted_norm_sq: empty grid");
    const auto& v = f.values;
    if (w == Weight::InvSqrt) {
        double acc = 0.0;
        for (int j = 0; j < n / 2; ++j)
            acc += v[j] * v[j] + v[n - 1 - j] * v[n - 1 - j];
        if (n % 2 == 1) acc += v[n / 2] * v[n / 2];
        return M_PI / n * acc;
    }
    auto s = cheb_sines(n);
    double acc = 0.0;
    for (int j = 0; j < n / 2; ++j) {
        double a = v[j] * s[j], b = v[n - 1 - j] * s[n - 1 - j];
        acc += a * a + b * b;
    }
    if (n % 2 == 1) {
        double m = v[n / 2] * s[n / 2];
        acc += m * m;
    }
    return M_PI / n * acc;
}

TailDiagnostic tail_diagnostic(const ChebSeries& s, double tol) {
    TailDiagnostic d;
    const auto& c = s.coeffs();
    const std::size_t nc = c.size();
    const std::size_t keep = (9 * nc + 9) / 10;  // ceil(0.9 n); tail = the rest
    for (std::size_t k = 0; k < nc; ++k) {
        const double m = c[k] * c[k];
        d.total_mass += m;
        if (k >= keep) {
            d.tail_mass += m;
            d.max_tail_coeff = std::max(d.max_tail_coeff, std::fabs(c[k]));
        }
    }
    d.ratio = d.total_mass > 0.0 ? d.tail_mass / d.total_mass : 0.0;
    d.ok = d.ratio <= tol;
    return d;
}

}  // namespace finhilb
