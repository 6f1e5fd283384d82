#include "finhilb/airfoil.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "finhilb/errors.hpp"
#include "transforms.hpp"

namespace finhilb {

ChebSeries analyze_U(const GridFunction& g) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("analyze_U: empty grid");
    const auto s = cheb_sines(n);
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = g.values[j] * s[j];
    std::vector<double> y = detail::dst2(x);
    // sum_j sin(a theta_j) sin(b theta_j) = (n/2) delta_ab for a,b < n and n
    // for a = b = n, hence the halved top coefficient.
    std::vector<double> b(n);
    for (int k = 0; k + 1 < n; ++k) b[k] = y[k] / n;
    b[n - 1] = y[n - 1] / (2.0 * n);
    return ChebSeries(Basis::SecondKind, std::move(b));
}

AirfoilSolution airfoil_solve(const GridFunction& g, double null_coefficient, double tail_tol) {
    const ChebSeries b = analyze_U(g);
    const TailDiagnostic d = tail_diagnostic(b, tail_tol);
    if (!d.ok) throw resolution_error(d.ratio, tail_tol);
    const int n = b.size();
    // a_{k+1} = b_k;  the grid resolves T-degrees up to n-1, so the top U
    // mode (below the tail threshold for resolved data) is dropped.
    std::vector<double> a(n, 0.0);
    for (int k = 0; k + 1 < n; ++k) a[k + 1] = b[k];
    AirfoilSolution s;
    s.particular = ChebSeries(Basis::FirstKind, std::move(a));
    s.null_coefficient = null_coefficient;
    return s;
}

GridFunction airfoil_reconstruct(const AirfoilSolution& s, int n) {
    if (n < s.particular.size())
        throw std::invalid_argument("airfoil_reconstruct: grid coarser than the solution");
    std::vector<double> a = s.particular.coeffs();
    if (a.empty()) a.assign(1, 0.0);
    a[0] = s.null_coefficient;
    const GridFunction num = synth_grid(ChebSeries(Basis::FirstKind, std::move(a)), n);
    const auto sines = cheb_sines(n);
    GridFunction f;
    f.values.resize(n);
    for (int j = 0; j < n; ++j) f.values[j] = num.values[j] / sines[j];
    return f;
}

double airfoil_residual(const AirfoilSolution& s, const GridFunction& g) {
    const int n = g.size();
    const GridFunction f = airfoil_reconstruct(s, n);
    FhtOptions opts;
    opts.enforce_tail = false;
    const GridFunction hf = fht_apply(FhtInput::from_grid(f), opts);
    GridFunction diff;
    diff.values.resize(n);
    for (int j = 0; j < n; ++j) diff.values[j] = hf.values[j] - g.values[j];
    return std::sqrt(weighted_norm_sq(diff, Weight::Sqrt));
}

}  // namespace finhilb
