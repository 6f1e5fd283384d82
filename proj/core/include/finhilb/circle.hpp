#ifndef FINHILB_CIRCLE_HPP
#define FINHILB_CIRCLE_HPP

#include <functional>
#include <vector>

namespace finhilb {

/// Values on the periodic grid theta_j = -pi + 2*pi*j/m, m a power of two.
struct CircleFunction {
    std::vector<double> values;
    int size() const { return static_cast<int>(values.size()); }
};

std::vector<double> circle_angles(int m);

/// g(theta) = f(cos theta) * |sin theta|; always even in theta.  The two grid
/// points with sin theta = 0 take the limiting value of the product (finite
/// whenever f e L^2 of the arcsine weight), obtained by linear extrapolation
/// from two nearby angles; the construction mirrors the negative-theta half
/// so evenness is exact.
CircleFunction lift(const std::function<double(double)>& f, int m);

double circle_mean(const CircleFunction& g);

/// Conjugate function on the grid: cos(n theta) -> sin(n theta),
/// sin(n theta) -> -cos(n theta), the mean is annihilated, and the Nyquist
/// mode is dropped (its conjugate vanishes identically on the grid).
CircleFunction conjugate(const CircleFunction& g);

/// Conjugate function evaluated off the grid at angle theta, by summing the
/// trigonometric interpolant's modes below Nyquist.
double conjugate_at(const CircleFunction& g, double theta);

/// Interval transform through the circle: Hf(cos psi) equals the conjugate of
/// the lift at psi divided by sin psi.  The division amplifies conjugate
/// error by 1/sin(psi); inside the guard band around 0 and pi the result is
/// refused rather than returned inaccurately.
double fht_via_circle(const std::function<double(double)>& f, double psi, int m = 2048,
                      double endpoint_guard = 0.05);

}  // namespace finhilb

#endif
