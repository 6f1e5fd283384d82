#ifndef FINHILB_CHEB_HPP
#define FINHILB_CHEB_HPP

#include <functional>
#include <vector>

namespace finhilb {

enum class Basis { FirstKind, SecondKind };

/// Coefficient vector in the T (FirstKind) or U (SecondKind) Chebyshev basis.
/// Truncation degree is size()-1; trailing exact zeros are permitted.
class ChebSeries {
  public:
    ChebSeries() : basis_(Basis::FirstKind) {}
    ChebSeries(Basis basis, std::vector<double> coeffs);  // rejects NaN/Inf

    Basis basis() const { return basis_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient k, zero beyond the stored length.
    double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  private:
    Basis basis_;
    std::vector<double> coeffs_;
};

/// Samples of a function at the interior Chebyshev-Gauss nodes
/// x_j = cos((2j+1)pi/(2n)), j = 0..n-1.  Nodes are strictly decreasing in j
/// (equivalently, theta_j = (2j+1)pi/(2n) is increasing); all |x_j| < 1.
struct GridFunction {
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(std::vector<double> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }

    static GridFunction sample(const std::function<double(double)>& f, int n);
};

// Canonical grid geometry for size n.  Nodes are built mirror-symmetrically,
// so x[n-1-j] == -x[j] exactly and the middle node of an odd grid is 0.
std::vector<double> cheb_nodes(int n);   // x_j, decreasing
std::vector<double> cheb_angles(int n);  // theta_j, increasing
std::vector<double> cheb_sines(int n);   // sin(theta_j) = sqrt(1-x_j^2)

/// T-basis coefficients from Gauss-grid samples:
/// a_k = (2-delta_{k0})/n * sum_j values_j T_k(x_j), k < n.
ChebSeries analyze_T(const GridFunction& samples);

/// Clenshaw evaluation of a T- or U-series at |x| <= 1.
double synth(const ChebSeries& s, double x);

/// Series values at the canonical grid of size n (fast transform path).
GridFunction synth_grid(const ChebSeries& s, int n);

/// Gauss-Chebyshev quadrature: integral of f(x)/sqrt(1-x^2) over (-1,1),
/// namely (pi/n) * sum_j values_j.  Exact for polynomial f of degree < 2n.
/// Summation pairs mirror nodes, so odd integrands cancel exactly.
double gauss_cheb_quad(const GridFunction& samples);

enum class Weight { InvSqrt, Sqrt };

/// Integral of f(x)^2 (1-x^2)^{-1/2} (InvSqrt) or f(x)^2 (1-x^2)^{+1/2}
/// (Sqrt) over (-1,1), with the weight folded into the Gauss-Chebyshev rule.
double weighted_norm_sq(const GridFunction& f, Weight w);

/// Tail-decay diagnostic over the last 10% of coefficients: the expansion is
/// considered resolved when tail_mass/total_mass <= tol (masses are sums of
/// squared coefficients).
struct TailDiagnostic {
    double tail_mass = 0.0;
    double total_mass = 0.0;
    double ratio = 0.0;
    double max_tail_coeff = 0.0;
    bool ok = true;
};
TailDiagnostic tail_diagnostic(const ChebSeries& s, double tol = 1e-8);

}  // namespace finhilb

#endif
