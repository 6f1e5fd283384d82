#ifndef FINHILB_ROOTS_HPP
#define FINHILB_ROOTS_HPP

#include <functional>
#include <vector>

namespace finhilb {

/// Three-term recurrence of the monic orthogonal family of a weight:
///   p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x),
/// alpha[k] for k = 0..N-1, beta[k] meaningful for k >= 1 (beta[0] stays 0),
/// and mass = integral of the weight.
struct RecurrenceCoeffs {
    std::vector<double> alpha;
    std::vector<double> beta;
    double mass = 0.0;
    int size() const { return static_cast<int>(alpha.size()); }
};

RecurrenceCoeffs chebyshev_recurrence(int n);  // beta: 1/2 then 1/4
RecurrenceCoeffs legendre_recurrence(int n);   // beta_k = k^2/(4k^2-1)
RecurrenceCoeffs hermite_recurrence(int n);    // beta_k = k/2

/// Stieltjes procedure against the q-point Gauss-Chebyshev discretization of
/// the measure w(x)dx on (-1,1): the arcsine rule with the weight folded in,
/// omega_j = (pi/q) w(x_j) sqrt(1-x_j^2).  q defaults to 8n and must be at
/// least 4n so inner products through degree 2n are trustworthy.  Inner
/// products accumulate over mirrored node pairs, which keeps every alpha_k
/// exactly zero for even weights.
RecurrenceCoeffs recurrence_from_weight(const std::function<double(double)>& w, int n, int q = 0);

/// Roots in nondecreasing order (equal entries encode multiplicity).
struct RootSet {
    std::vector<double> roots;
    int degree() const { return static_cast<int>(roots.size()); }
};

/// Eigenvalues of the n-by-n Jacobi matrix of the recurrence = roots of the
/// degree-n orthogonal polynomial, by Sturm-count bisection on the shifted
/// LDL^T recurrence (square-root free, counts stay monotone, no eigenvector
/// work), refined to the resolution of double.
RootSet roots_via_jacobi(const RecurrenceCoeffs& rec, int n);

/// Roots of p' from roots of p: distinct roots of p with multiplicity m keep
/// m-1 copies, and each gap between adjacent distinct roots contributes the
/// unique zero of sum_i m_i/(x - y_i), bracketed by construction and bisected
/// to 1e-13.  Root clusters closer than 1e-12 are merged first.
RootSet differentiate_rooted(const RootSet& rs);

RootSet iterate_derivatives(RootSet rs, int times);

double arcsine_cdf(double x);  // 1/2 + asin(x)/pi, clamped

/// Kolmogorov-Smirnov distance of sorted samples against a CDF, evaluated at
/// the jump points.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf);

/// KS distance of a root set against the arcsine law; roots must lie in
/// [-1,1] (up to rounding slack).
double ks_to_arcsine(const RootSet& rs);

/// Hermite roots rescaled by 1/sqrt(2n) so the semicircle support becomes
/// (-1,1).
RootSet hermite_roots(int n);

}  // namespace finhilb

#endif
