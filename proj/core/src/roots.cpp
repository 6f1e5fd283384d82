#include "finhilb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "finhilb/cheb.hpp"
#include "finhilb/errors.hpp"

namespace finhilb {

namespace {

void require_count(int n) {
    if (n < 1) throw std::invalid_argument("recurrence: need at least one coefficient");
}

}  // namespace

RecurrenceCoeffs chebyshev_recurrence(int n) {
    require_count(n);
    RecurrenceCoeffs r;
    r.alpha.assign(n, 0.0);
    r.beta.assign(n, 0.25);
    r.beta[0] = 0.0;
    if (n > 1) r.beta[1] = 0.5;
    r.mass = std::acos(-1.0);
    return r;
}

RecurrenceCoeffs legendre_recurrence(int n) {
    require_count(n);
    RecurrenceCoeffs r;
    r.alpha.assign(n, 0.0);
    r.beta.assign(n, 0.0);
    for (int k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k) * k;
        r.beta[k] = kk / (4.0 * kk - 1.0);
    }
    r.mass = 2.0;
    return r;
}

RecurrenceCoeffs hermite_recurrence(int n) {
    require_count(n);
    RecurrenceCoeffs r;
    r.alpha.assign(n, 0.0);
    r.beta.assign(n, 0.0);
    for (int k = 1; k < n; ++k) r.beta[k] = 0.5 * k;
    r.mass = std::sqrt(std::acos(-1.0));
    return r;
}

RecurrenceCoeffs recurrence_from_weight(const std::function<double(double)>& w, int n, int q) {
    require_count(n);
    if (q == 0) q = 8 * n;
    if (q < 4 * n) throw std::invalid_argument("recurrence_from_weight: need q >= 4n");
    const double pi = std::acos(-1.0);
    const auto x = cheb_nodes(q);
    const auto s = cheb_sines(q);
    std::vector<double> omega(q);
    for (int j = 0; j < q; ++j) {
        const double wj = w(x[j]);
        if (!std::isfinite(wj) || wj < 0.0)
            throw std::invalid_argument("recurrence_from_weight: weight must be finite and >= 0");
        omega[j] = (pi / q) * wj * s[j];
    }

    // Mirrored-pair accumulation: for even weights the paired terms of every
    // odd-symmetric integrand cancel exactly, so alpha stays identically 0.
    auto pairsum = [q](auto&& term) {
        double acc = 0.0;
        for (int j = 0; j < q / 2; ++j) acc += term(j) + term(q - 1 - j);
        if (q % 2) acc += term(q / 2);
        return acc;
    };

    RecurrenceCoeffs r;
    r.alpha.assign(n, 0.0);
    r.beta.assign(n, 0.0);
    r.mass = pairsum([&](int j) { return omega[j]; });
    if (!(r.mass > 0.0)) throw degenerate_weight_error(0);

    std::vector<double> p_prev(q, 0.0), p_cur(q, 1.0), p_next(q);
    double nrm_prev = 0.0;
    double nrm_cur = r.mass;
    for (int k = 0; k < n; ++k) {
        r.alpha[k] =
            pairsum([&](int j) { return omega[j] * x[j] * p_cur[j] * p_cur[j]; }) / nrm_cur;
        // advance even on the last step: the new norm catches degeneracy at
        // the boundary of use
        for (int j = 0; j < q; ++j)
            p_next[j] = (x[j] - r.alpha[k]) * p_cur[j] - (k > 0 ? r.beta[k] : 0.0) * p_prev[j];
        const double nrm_next = pairsum([&](int j) { return omega[j] * p_next[j] * p_next[j]; });
        if (!(nrm_next > 0.0) || !std::isfinite(nrm_next)) throw degenerate_weight_error(k + 1);
        // drift check against the two directions Stieltjes orthogonalizes
        const double d1 = pairsum([&](int j) { return omega[j] * p_next[j] * p_cur[j]; }) /
                          std::sqrt(nrm_next * nrm_cur);
        if (std::fabs(d1) > 1e-8) throw degenerate_weight_error(k + 1);
        if (k > 0) {
            const double d2 = pairsum([&](int j) { return omega[j] * p_next[j] * p_prev[j]; }) /
                              std::sqrt(nrm_next * nrm_prev);
            if (std::fabs(d2) > 1e-8) throw degenerate_weight_error(k + 1);
        }
        if (k + 1 < n) r.beta[k + 1] = nrm_next / nrm_cur;
        std::swap(p_prev, p_cur);
        std::swap(p_cur, p_next);
        nrm_prev = nrm_cur;
        nrm_cur = nrm_next;
    }
    return r;
}

namespace {

// Eigenvalue count below lambda via the shifted LDL^T pivots:
//   d_0 = a_0 - lambda,  d_i = (a_i - lambda) - beta_i/d_{i-1};
// negative pivots count eigenvalues < lambda.
int negcount(const std::vector<double>& a, const std::vector<double>& beta, int n, double lambda,
             double pivmin) {
    int cnt = 0;
    double d = a[0] - lambda;
    if (std::fabs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++cnt;
    for (int i = 1; i < n; ++i) {
        d = (a[i] - lambda) - beta[i] / d;
        if (std::fabs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++cnt;
    }
    return cnt;
}

}  // namespace

RootSet roots_via_jacobi(const RecurrenceCoeffs& rec, int n) {
    if (n < 1 || n > rec.size())
        throw std::invalid_argument("roots_via_jacobi: degree outside the recurrence range");
    const auto& a = rec.alpha;
    const auto& beta = rec.beta;
    for (int k = 1; k < n; ++k)
        if (!(beta[k] > 0.0)) throw degenerate_weight_error(k);

    // Gershgorin bounds with offdiagonals b_i = sqrt(beta_i)
    double lo = a[0], hi = a[0], bmax = 0.0;
    {
        std::vector<double> b(n, 0.0);
        for (int k = 1; k < n; ++k) {
            b[k] = std::sqrt(beta[k]);
            bmax = std::max(bmax, beta[k]);
        }
        for (int i = 0; i < n; ++i) {
            const double r = (i > 0 ? b[i] : 0.0) + (i + 1 < n ? b[i + 1] : 0.0);
            lo = std::min(lo, a[i] - r);
            hi = std::max(hi, a[i] + r);
        }
        const double slack = 1e-12 * (hi - lo) + 1e-300;
        lo -= slack;
        hi += slack;
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, bmax);

    RootSet out;
    out.roots.reserve(n);
    struct Box {
        double lo, hi;
        int clo, chi;  // eigenvalue indices in (lo, hi]
    };
    std::vector<Box> stack{{lo, hi, 0, n}};
    while (!stack.empty()) {
        Box box = stack.back();
        stack.pop_back();
        while (true) {
            const int count = box.chi - box.clo;
            if (count <= 0) break;
            const double mid = 0.5 * (box.lo + box.hi);
            if (mid <= box.lo || mid >= box.hi) {
                // interval at the resolution of double: emit (handles clusters)
                for (int i = 0; i < count; ++i) out.roots.push_back(mid);
                break;
            }
            if (count == 1) {
                const int below = negcount(a, beta, n, mid, pivmin);
                if (below > box.clo)
                    box.hi = mid;
                else
                    box.lo = mid;
                continue;
            }
            const int below = negcount(a, beta, n, mid, pivmin);
            const int nm = std::clamp(below, box.clo, box.chi);
            if (nm > box.clo) stack.push_back({box.lo, mid, box.clo, nm});
            box.lo = mid;
            box.clo = nm;
        }
    }
    if (static_cast<int>(out.roots.size()) != n) throw numerical_failure(lo, hi);
    std::sort(out.roots.begin(), out.roots.end());
    for (double r : out.roots)
        if (!std::isfinite(r)) throw numerical_failure(lo, hi);
    return out;
}

namespace {

struct Clustered {
    std::vector<double> y;  // distinct representatives, increasing
    std::vector<int> m;     // multiplicities
};

Clustered cluster_roots(std::vector<double> roots) {
    std::sort(roots.begin(), roots.end());
    Clustered c;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i + 1;
        double sum = roots[i];
        while (j < roots.size() && roots[j] - roots[j - 1] < 1e-12) sum += roots[j++];
        c.y.push_back(sum / static_cast<double>(j - i));
        c.m.push_back(static_cast<int>(j - i));
        i = j;
    }
    return c;
}

// Zero of S(x) = sum_i m_i/(x - y_i) in (y[g], y[g+1]); S decreases through
// the gap from +inf to -inf, so the bracket never needs checking.
double gap_zero(const Clustered& c, int g) {
    double lo = c.y[g], hi = c.y[g + 1];
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;  // double resolution reached
        double s = 0.0;
        for (std::size_t i = 0; i < c.y.size(); ++i) s += c.m[i] / (mid - c.y[i]);
        if (s > 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13) return 0.5 * (lo + hi);
    }
    throw numerical_failure(lo, hi);
}

}  // namespace

RootSet differentiate_rooted(const RootSet& rs) {
    if (rs.degree() < 2)
        throw std::invalid_argument("differentiate_rooted: need degree at least 2");
    const Clustered c = cluster_roots(rs.roots);
    RootSet out;
    out.roots.reserve(rs.degree() - 1);
    const int K = static_cast<int>(c.y.size());
    for (int i = 0; i < K; ++i) {
        for (int rep = 1; rep < c.m[i]; ++rep) out.roots.push_back(c.y[i]);
        if (i + 1 < K) out.roots.push_back(gap_zero(c, i));
    }
    return out;
}

RootSet iterate_derivatives(RootSet rs, int times) {
    if (times < 0 || times >= rs.degree())
        throw std::invalid_argument("iterate_derivatives: order outside [0, degree)");
    for (int i = 0; i < times; ++i) rs = differentiate_rooted(rs);
    return rs;
}

double arcsine_cdf(double x) {
    const double pi = std::acos(-1.0);
    const double c = std::clamp(x, -1.0, 1.0);
    return 0.5 + std::asin(c) / pi;
}

double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf) {
    const int n = static_cast<int>(sorted_samples.size());
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        d = std::max(d, std::fabs((i + 1.0) / n - f));
        d = std::max(d, std::fabs(static_cast<double>(i) / n - f));
    }
    return d;
}

double ks_to_arcsine(const RootSet& rs) {
    for (double r : rs.roots)
        if (r < -1.0 - 1e-12 || r > 1.0 + 1e-12) throw out_of_support_error(r);
    std::vector<double> s = rs.roots;
    std::sort(s.begin(), s.end());
    return ks_distance(s, arcsine_cdf);
}

RootSet hermite_roots(int n) {
    RootSet rs = roots_via_jacobi(hermite_recurrence(n), n);
    const double scale = 1.0 / std::sqrt(2.0 * n);
    for (double& r : rs.roots) r *= scale;
    return rs;
}

}  // namespace finhilb
