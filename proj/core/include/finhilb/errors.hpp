#ifndef FINHILB_ERRORS_HPP
#define FINHILB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finhilb {

// Input not resolved by its expansion: the trailing-coefficient mass of the
// series exceeds the requested fraction of the total mass.
class resolution_error : public std::runtime_error {
  public:
    resolution_error(double tail_ratio, double tol)
        : std::runtime_error("series under-resolved: tail mass ratio " +
                             std::to_string(tail_ratio) + " exceeds " + std::to_string(tol)),
          tail_ratio(tail_ratio), tol(tol) {}
    double tail_ratio;
    double tol;
};

// The mean-value-zero hypothesis of the Parseval identity is violated.
// Carries the measured a0 together with both sides of the identity and the
// corrected right-hand side lhs = rhs - pi*a0^2 that holds without the
// hypothesis.
class mean_value_error : public std::invalid_argument {
  public:
    mean_value_error(double a0, double lhs, double rhs, double corrected_rhs)
        : std::invalid_argument("nonzero arcsine mean a0 = " + std::to_string(a0) +
                                "; identity holds in the corrected form lhs = rhs - pi*a0^2"),
          a0(a0), lhs(lhs), rhs(rhs), corrected_rhs(corrected_rhs) {}
    double a0;
    double lhs;
    double rhs;
    double corrected_rhs;
};

// The quadrature ground-truth evaluation hit non-integrable behavior.
class oracle_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The discretized weight supports fewer polynomials than requested
// (a nonpositive recurrence norm showed up at the reported index).
class degenerate_weight_error : public std::runtime_error {
  public:
    explicit degenerate_weight_error(int index)
        : std::runtime_error("weight degenerate at recurrence index " + std::to_string(index)),
          index(index) {}
    int index;
};

// Root bisection failed to converge; carries the last bracketing interval.
class numerical_failure : public std::runtime_error {
  public:
    numerical_failure(double lo, double hi)
        : std::runtime_error("bisection failed to converge in [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]"),
          lo(lo), hi(hi) {}
    double lo;
    double hi;
};

// Circle-lift evaluation too close to theta = 0 or pi; the 1/sin(psi) factor
// amplifies grid error by the reported amount.
class near_endpoint_error : public std::domain_error {
  public:
    near_endpoint_error(double psi, double amplification)
        : std::domain_error("psi = " + std::to_string(psi) +
                            " inside the endpoint guard band (error amplification " +
                            std::to_string(amplification) + ")"),
          psi(psi), amplification(amplification) {}
    double psi;
    double amplification;
};

// A transport step lost more mass than the stability bound allows.
class instability_error : public std::runtime_error {
  public:
    instability_error(double mass_loss, double dt)
        : std::runtime_error("unstable step: mass loss " + std::to_string(mass_loss) +
                             " exceeds 10*dt with dt = " + std::to_string(dt)),
          mass_loss(mass_loss), dt(dt) {}
    double mass_loss;
    double dt;
};

// Samples fall outside the distribution's support.
class out_of_support_error : public std::invalid_argument {
  public:
    explicit out_of_support_error(double sample)
        : std::invalid_argument("sample " + std::to_string(sample) + " outside [-1, 1]"),
          sample(sample) {}
    double sample;
};

}  // namespace finhilb

#endif
