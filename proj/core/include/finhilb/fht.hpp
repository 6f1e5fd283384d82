#ifndef FINHILB_FHT_HPP
#define FINHILB_FHT_HPP

#include <functional>

#include "finhilb/cheb.hpp"

namespace finhilb {

// Kernel orientation.  On the interval the transform is
//     (Hf)(x) = (1/pi) p.v. integral_{-1}^{1} f(y)/(y-x) dy,
// the orientation under which H maps T_k(y)/sqrt(1-y^2) to U_{k-1}(x) and the
// coefficient map below is a pure index shift.  outer_transform evaluates the
// Stieltjes orientation (1/pi) integral f(y)/(x-y) dy, which is the standard
// one off the interval; the two differ by sign.

struct FhtOptions {
    double tail_tol = 1e-8;
    bool enforce_tail = true;  // false: under-resolved inputs flagged, not rejected
};

/// Grid samples of f together with the T-expansion of f(x)*sqrt(1-x^2).
/// The leading coefficient a0 is the arcsine-mean pairing that the Parseval
/// identity requires to vanish.
class FhtInput {
  public:
    static FhtInput from_grid(GridFunction f);
    static FhtInput from_function(const std::function<double(double)>& f, int n);

    const GridFunction& grid() const { return f_; }
    const ChebSeries& weighted_series() const { return g_; }
    double a0() const { return g_[0]; }

  private:
    FhtInput(GridFunction f, ChebSeries g) : f_(std::move(f)), g_(std::move(g)) {}
    GridFunction f_;
    ChebSeries g_;
};

/// The transform in coefficient space: a T-series with coefficients a_k maps
/// to the U-series with coefficient a_k on U_{k-1}; a_0 is annihilated.
ChebSeries fht_coeff_map(const ChebSeries& a);

/// U-series of Hf; throws resolution_error when the input fails its tail
/// diagnostic and opts.enforce_tail is set.
ChebSeries fht_series(const FhtInput& in, const FhtOptions& opts = {});

/// Hf at the input's Chebyshev nodes.
GridFunction fht_apply(const FhtInput& in, const FhtOptions& opts = {});
GridFunction fht_apply(const GridFunction& f, const FhtOptions& opts = {});

/// Independent principal-value evaluation of Hf(x) for interior x by
/// singularity subtraction after the y = cos(theta) substitution:
///   Hf(cos psi) = (1/pi) int_0^pi [G(theta)-G(psi)]/(cos theta - cos psi) dtheta,
/// G(theta) = f(cos theta) sin(theta); the compensating term vanishes
/// identically.  n is the total quadrature size across the two panels split
/// at psi.  Ground truth for tests; the operator itself never integrates.
double fht_quadrature_oracle(const std::function<double(double)>& f, double x, int n);

struct ParsevalReport {
    double lhs = 0.0;      // weighted_norm_sq(Hf, Sqrt)
    double rhs = 0.0;      // weighted_norm_sq(f, Sqrt)
    double rel_gap = 0.0;  // |lhs-rhs|/rhs
    double a0 = 0.0;
};

/// Checks the weighted Parseval identity.  Requires |a0| <= a0_tol; on
/// violation throws mean_value_error reporting a0 and the corrected identity
/// lhs = rhs - pi*a0^2 that holds without the mean-zero hypothesis.
ParsevalReport parseval_check(const FhtInput& in, double a0_tol = 1e-10);

/// Sqrt-weighted norm of H applied to c/sqrt(1-x^2); zero up to rounding for
/// every c since that family spans the null space.
double nullspace_residual(double c, int n = 256);

/// (1/pi) integral f(y)/(x-y) dy for |x| > 1 (smooth kernel, Gauss-Chebyshev
/// rule with the weight folded in).
double outer_transform(const GridFunction& f, double x);

struct ProbeReport {
    double width = 0.0;
    double inner_norm = 0.0;  // ||f||_{L2(-1,1)}
    double deriv_norm = 0.0;  // ||f'||_{L2(-1,1)}
    double outer_norm = 0.0;  // ||Hf||_{L2(2,3)}
    double log_ratio = 0.0;   // ln(inner_norm/outer_norm)
};

/// How much L2 mass the transform of a smooth compactly supported f leaves on
/// (2,3), against the interior norms that bound it from below.  The width
/// overload builds the mollified bump exp(1 - 1/(1-(x/width)^2)).
ProbeReport lower_bound_probe(double width);
ProbeReport lower_bound_probe(const std::function<double(double)>& f,
                              const std::function<double(double)>& df, double width);

double bump(double x, double width);
double bump_deriv(double x, double width);

}  // namespace finhilb

#endif
