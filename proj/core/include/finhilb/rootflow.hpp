#ifndef FINHILB_ROOTFLOW_HPP
#define FINHILB_ROOTFLOW_HPP

#include <vector>

#include "finhilb/roots.hpp"

namespace finhilb {

enum class WeightId { Chebyshev, Legendre, Hermite };

/// Density samples on the uniform grid x_i = -1 + 2i/(M-1).  Trapezoid
/// weights (half cells at the boundary) are the mass convention throughout.
struct DensityProfile {
    std::vector<double> grid;
    std::vector<double> u;
    double t = 0.0;
    int size() const { return static_cast<int>(u.size()); }
};

/// Cell averages of the closed-form CDF, so the trapezoid mass is exactly 1
/// and the singular edge cells carry their true mass.
DensityProfile arcsine_profile(int m = 512);
DensityProfile semicircle_profile(int m = 512);

double trapezoid_mass(const DensityProfile& d);

/// Hu on the uniform grid in the density convention
/// (1/pi) p.v. integral u(y)/(x-y) dy.  The density is resampled onto
/// Chebyshev nodes through its cumulative mass function (monotone cubic), so
/// cell mass survives the grid change; the transform then runs in coefficient
/// space and the result is synthesized back.  Tail failures are tolerated up
/// to a loose guard (evolved profiles have front kinks); catastrophically
/// unresolved data is refused.
std::vector<double> hilbert_of_density(const DensityProfile& d, int cheb_n = 512);

/// Node values of (1/pi) arctan(Hu/u), regularized by eps where u is small
/// inside the support (u > 10*eps marks support, taken as one interval) and
/// saturated to -1/2 left of the support, +1/2 right of it: the sign the
/// exterior field of a nonnegative density has.
std::vector<double> flux(const DensityProfile& d, double eps);

struct StepDiagnostics {
    double mass_before = 0.0;
    double mass_after = 0.0;
    double clipped_mass = 0.0;
};

/// One explicit conservative step.  Node fluxes are averaged onto faces
/// (centered differencing in the interior); faces outside the support,
/// including the two domain faces, take the saturated value, which makes the
/// pre-clipping mass rate exactly -1.  Negative undershoots are clipped and
/// recorded.  Requires 0 < dt <= grid spacing.
DensityProfile step(const DensityProfile& d, double dt, double eps,
                    StepDiagnostics* diag = nullptr);

/// Steps until t_final with eps = 1e-8 * max(u) refreshed each step.
DensityProfile evolve(DensityProfile d, double t_final, double dt = 1e-3);

/// KS distance between the evolved PDE profile (normalized) and the roots of
/// the floor(t*n)-th derivative of the degree-n orthogonal polynomial of the
/// weight.  Chebyshev and Legendre start from the arcsine profile; Hermite
/// starts from the semicircle and its roots are rescaled by 1/sqrt(2n).
double compare_to_empirical(WeightId weight, double t, int n, int m_grid = 512,
                            double dt = 1e-3);

/// Normalized CDF of a profile by trapezoid accumulation, linear inside
/// cells; used for the comparisons and exposed for the CLI snapshots.
double profile_cdf(const DensityProfile& d, double x);

}  // namespace finhilb

#endif
