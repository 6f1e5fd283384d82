#ifndef FINHILB_QUADRATURE_HPP
#define FINHILB_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace finhilb {

/// Gauss-Legendre rule on [-1,1]; nodes/weights cached per size.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

/// Integral of f over [a,b] with an n-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace finhilb

#endif
