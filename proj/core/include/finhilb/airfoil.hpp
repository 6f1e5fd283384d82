#ifndef FINHILB_AIRFOIL_HPP
#define FINHILB_AIRFOIL_HPP

#include "finhilb/cheb.hpp"
#include "finhilb/fht.hpp"

namespace finhilb {

/// Solution of Hf = g in the arcsine-weighted classes: a particular solution
/// carried as the T-series of f*sqrt(1-x^2) with zero leading coefficient,
/// plus an arbitrary multiple of the null direction 1/sqrt(1-x^2) selected by
/// null_coefficient (the T_0 slot of the same series).
struct AirfoilSolution {
    ChebSeries particular{Basis::FirstKind, {}};
    double null_coefficient = 0.0;
};

/// U-expansion of grid data: b_k = (2/n) sum_j g_j sin(theta_j) sin((k+1)theta_j),
/// exact through degree n-1 on the n-point grid (the top mode carries half the
/// usual normalization).
ChebSeries analyze_U(const GridFunction& g);

/// Inverts the coefficient shift: g = sum b_k U_k gives a_{k+1} = b_k, with
/// the T_0 slot free.  The expansion tail is checked against tail_tol; an
/// unresolved right-hand side is refused.
AirfoilSolution airfoil_solve(const GridFunction& g, double null_coefficient = 0.0,
                              double tail_tol = 1e-8);

/// f at the n Chebyshev nodes: synthesize the full T-series (null slot
/// included) and divide out sqrt(1-x^2).
GridFunction airfoil_reconstruct(const AirfoilSolution& s, int n);

/// Sqrt-weighted norm of H(reconstruction) - g.
double airfoil_residual(const AirfoilSolution& s, const GridFunction& g);

}  // namespace finhilb

#endif
