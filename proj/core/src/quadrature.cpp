#include "finhilb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace finhilb {

namespace {

std::mutex cache_mutex;
std::map<int, GaussLegendre> cache;

// Newton iteration on P_n with the usual cosine initial guesses; nodes are
// filled symmetrically so the rule is exactly antisymmetric.
GaussLegendre build(int n) {
    GaussLegendre gl;
    gl.nodes.assign(static_cast<std::size_t>(n), 0.0);
    gl.weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * k + 1.0) * z * p2 - k * p3) / (k + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        gl.nodes[i] = -z;
        gl.nodes[n - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: size must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& gl = gauss_legendre(n);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += gl.weights[i] * f(mid + rad * gl.nodes[i]);
    return rad * acc;
}

}  // namespace finhilb
