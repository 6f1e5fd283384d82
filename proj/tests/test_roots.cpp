#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "finhilb/errors.hpp"
#include "finhilb/roots.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace finhilb;

namespace {
const double PI = std::acos(-1.0);
}

TEST_CASE("closed-form recurrences") {
    const RecurrenceCoeffs c = chebyshev_recurrence(6);
    CHECK_ABS(c.mass, PI, 1e-15);
    for (double a : c.alpha) CHECK(a == 0.0);
    CHECK(c.beta[1] == 0.5);
    for (int k = 2; k < 6; ++k) CHECK(c.beta[k] == 0.25);

    const RecurrenceCoeffs l = legendre_recurrence(6);
    CHECK(l.mass == 2.0);
    for (double a : l.alpha) CHECK(a == 0.0);
    for (int k = 1; k < 6; ++k)
        CHECK_ABS(l.beta[k], k * k / (4.0 * k * k - 1.0), 1e-16);

    const RecurrenceCoeffs h = hermite_recurrence(6);
    CHECK_ABS(h.mass, std::sqrt(PI), 1e-15);
    for (int k = 1; k < 6; ++k) CHECK(h.beta[k] == 0.5 * k);
}

TEST_CASE("discretized measure reproduces classical recurrences") {
    SUBCASE("inverse square-root weight -> Chebyshev") {
        const RecurrenceCoeffs got = recurrence_from_weight(
            [](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, 12);
        const RecurrenceCoeffs want = chebyshev_recurrence(12);
        CHECK_ABS(got.mass, want.mass, 1e-12);
        for (int k = 0; k < 12; ++k) {
            CAPTURE(k);
            CHECK(got.alpha[k] == 0.0);
            if (k >= 1) CHECK_ABS(got.beta[k], want.beta[k], 1e-13);
        }
    }
    SUBCASE("flat weight -> Legendre") {
        // the arcsine-node rule is second order in q for weights without the
        // 1/sqrt(1-x^2) factor (the sine part of the folded integrand), so
        // the default q = 8n carries an O(q^-2) bias that refines away
        const RecurrenceCoeffs got =
            recurrence_from_weight([](double) { return 1.0; }, 20);
        const RecurrenceCoeffs want = legendre_recurrence(20);
        CHECK_ABS(got.mass, 2.0, 4e-5);
        for (int k = 1; k < 20; ++k) {
            CAPTURE(k);
            CHECK_ABS(got.beta[k], want.beta[k], 2e-5);
        }
        const RecurrenceCoeffs fine =
            recurrence_from_weight([](double) { return 1.0; }, 20, 2560);
        CHECK(std::fabs(fine.mass - 2.0) < std::fabs(got.mass - 2.0) / 50.0);
        for (int k = 1; k < 20; ++k) {
            CAPTURE(k);
            CHECK_ABS(fine.beta[k], want.beta[k], 1e-7);
        }
    }
    SUBCASE("generic even weight against the long-double moment route") {
        // both routes over the same 4096-node discrete measure: what differs
        // is the algorithm (iterated orthogonalization vs Gram Cholesky)
        auto w = [](double x) { return 1.0 + 0.5 * x * x + 0.3 * std::pow(x, 4); };
        const RecurrenceCoeffs got = recurrence_from_weight(w, 10, 4096);
        const oracles::MomentRecurrence want = oracles::recurrence_from_moments(w, 10, 4096);
        CHECK_ABS(got.mass, want.mass, 1e-12);
        for (int k = 0; k < 10; ++k) {
            CAPTURE(k);
            CHECK(got.alpha[k] == 0.0);
            CHECK_ABS(want.alpha[k], 0.0, 1e-15);
            if (k >= 1) CHECK_ABS(got.beta[k], want.beta[k], 1e-12);
        }
    }
    SUBCASE("tilted weight has nonzero centers that match the moment route") {
        auto w = [](double x) { return 1.0 + 0.5 * x; };
        const RecurrenceCoeffs got = recurrence_from_weight(w, 8, 4096);
        const oracles::MomentRecurrence want = oracles::recurrence_from_moments(w, 8, 4096);
        CHECK(std::fabs(got.alpha[0]) > 1e-3);
        for (int k = 0; k < 8; ++k) {
            CAPTURE(k);
            CHECK_ABS(got.alpha[k], want.alpha[k], 1e-12);
            if (k >= 1) CHECK_ABS(got.beta[k], want.beta[k], 1e-12);
        }
    }
    SUBCASE("validation") {
        auto one = [](double) { return 1.0; };
        CHECK_THROWS_AS(recurrence_from_weight(one, 8, 16), std::invalid_argument);
        CHECK_THROWS_AS(recurrence_from_weight([](double) { return 0.0; }, 8),
                        degenerate_weight_error);
        CHECK_THROWS_AS(recurrence_from_weight([](double x) { return x; }, 8),
                        std::invalid_argument);
    }
}

TEST_CASE("Jacobi eigenvalues are the classical nodes") {
    SUBCASE("Chebyshev roots at every size") {
        for (int n : {1, 2, 4, 37, 100}) {
            CAPTURE(n);
            const RootSet rs = roots_via_jacobi(chebyshev_recurrence(n), n);
            REQUIRE(rs.degree() == n);
            for (int j = 0; j < n; ++j)
                CHECK_ABS(rs.roots[j], -std::cos((2 * j + 1) * PI / (2 * n)), 5e-15);
        }
    }
    SUBCASE("frozen small Legendre and Hermite nodes") {
        const RootSet l2 = roots_via_jacobi(legendre_recurrence(2), 2);
        CHECK_ABS(l2.roots[0], -1.0 / std::sqrt(3.0), 1e-14);
        CHECK_ABS(l2.roots[1], 1.0 / std::sqrt(3.0), 1e-14);
        const RootSet l5 = roots_via_jacobi(legendre_recurrence(5), 5);
        CHECK_ABS(l5.roots[0], -0.9061798459386640, 1e-13);
        CHECK_ABS(l5.roots[1], -0.5384693101056831, 1e-13);
        CHECK_ABS(l5.roots[2], 0.0, 1e-14);
        const RootSet h3 = roots_via_jacobi(hermite_recurrence(3), 3);
        CHECK_ABS(h3.roots[0], -std::sqrt(1.5), 1e-13);
        CHECK_ABS(h3.roots[1], 0.0, 1e-14);
        CHECK_ABS(h3.roots[2], std::sqrt(1.5), 1e-13);
    }
    SUBCASE("ordering and interlacing") {
        const RootSet a = roots_via_jacobi(legendre_recurrence(11), 10);
        const RootSet b = roots_via_jacobi(legendre_recurrence(11), 11);
        for (int j = 1; j < 10; ++j) CHECK(a.roots[j] > a.roots[j - 1]);
        for (int j = 0; j < 10; ++j) {
            CHECK(b.roots[j] < a.roots[j]);
            CHECK(a.roots[j] < b.roots[j + 1]);
        }
    }
    SUBCASE("degree must fit the recurrence") {
        CHECK_THROWS_AS(roots_via_jacobi(chebyshev_recurrence(4), 5),
                        std::invalid_argument);
        CHECK_THROWS_AS(roots_via_jacobi(chebyshev_recurrence(4), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("rescaled Hermite roots live in the open interval") {
    const RootSet rs = hermite_roots(50);
    REQUIRE(rs.degree() == 50);
    for (int j = 0; j < 50; ++j) {
        CHECK(rs.roots[j] > -1.0);
        CHECK(rs.roots[j] < 1.0);
        CHECK_ABS(rs.roots[j], -rs.roots[49 - j], 1e-13);
    }
    const RootSet h2 = hermite_roots(2);
    CHECK_ABS(h2.roots[1], 1.0 / (2.0 * std::sqrt(2.0)), 1e-14);
}

TEST_CASE("derivative root sets") {
    SUBCASE("simple cubic: (4 +- sqrt 7)/3") {
        const RootSet d = differentiate_rooted(RootSet{{0.0, 1.0, 3.0}});
        REQUIRE(d.degree() == 2);
        CHECK_ABS(d.roots[0], (4.0 - std::sqrt(7.0)) / 3.0, 1e-12);
        CHECK_ABS(d.roots[1], (4.0 + std::sqrt(7.0)) / 3.0, 1e-12);
    }
    SUBCASE("multiplicity is preserved minus one") {
        const RootSet d = differentiate_rooted(RootSet{{0.0, 0.0, 1.0}});
        REQUIRE(d.degree() == 2);
        CHECK_ABS(d.roots[0], 0.0, 1e-13);
        CHECK_ABS(d.roots[1], 2.0 / 3.0, 1e-12);
        const RootSet t = differentiate_rooted(RootSet{{2.0, 2.0, 2.0}});
        REQUIRE(t.degree() == 2);
        CHECK(t.roots[0] == 2.0);
        CHECK(t.roots[1] == 2.0);
    }
    SUBCASE("Chebyshev roots differentiate to the extreme points") {
        const int n = 8;
        const RootSet tn = roots_via_jacobi(chebyshev_recurrence(n), n);
        const RootSet d = differentiate_rooted(tn);
        REQUIRE(d.degree() == n - 1);
        for (int j = 1; j < n; ++j)
            CHECK_ABS(d.roots[j - 1], -std::cos(j * PI / n), 1e-11);
    }
    SUBCASE("iterated all the way down: the centroid") {
        const RootSet one = iterate_derivatives(RootSet{{1.0, 2.0, 3.0, 4.0}}, 3);
        REQUIRE(one.degree() == 1);
        CHECK_ABS(one.roots[0], 2.5, 1e-11);
        const RootSet same = iterate_derivatives(RootSet{{1.0, 2.0, 3.0, 4.0}}, 0);
        CHECK(same.degree() == 4);
        CHECK_THROWS_AS(iterate_derivatives(RootSet{{1.0, 2.0}}, 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(iterate_derivatives(RootSet{{1.0, 2.0}}, -1),
                        std::invalid_argument);
        CHECK_THROWS_AS(differentiate_rooted(RootSet{{1.0}}), std::invalid_argument);
    }
    SUBCASE("interlacing holds for a random set") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        std::vector<double> r(12);
        for (auto& v : r) v = uni(rng);
        std::sort(r.begin(), r.end());
        const RootSet d = differentiate_rooted(RootSet{r});
        REQUIRE(d.degree() == 11);
        for (int j = 0; j < 11; ++j) {
            CHECK(d.roots[j] >= r[j]);
            CHECK(d.roots[j] <= r[j + 1]);
        }
    }
}

TEST_CASE("Kolmogorov-Smirnov machinery") {
    SUBCASE("arcsine distribution values") {
        CHECK(arcsine_cdf(-1.0) == 0.0);
        CHECK(arcsine_cdf(1.0) == 1.0);
        CHECK(arcsine_cdf(-2.0) == 0.0);
        CHECK_ABS(arcsine_cdf(0.0), 0.5, 1e-16);
        CHECK_ABS(arcsine_cdf(1.0 / std::sqrt(2.0)), 0.75, 1e-15);
        CHECK_ABS(arcsine_cdf(0.5), 2.0 / 3.0, 1e-15);
    }
    SUBCASE("Chebyshev roots sit at distance exactly 1/(2n)") {
        for (int n : {4, 10, 57}) {
            CAPTURE(n);
            const RootSet rs = roots_via_jacobi(chebyshev_recurrence(n), n);
            CHECK_ABS(ks_to_arcsine(rs), 0.5 / n, 1e-12);
        }
    }
    SUBCASE("jump-point evaluation dominates a dense scan") {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> uni(-0.99, 0.99);
        std::vector<double> r(40);
        for (auto& v : r) v = uni(rng);
        std::sort(r.begin(), r.end());
        const double ks = ks_distance(r, arcsine_cdf);
        const double scan = oracles::ks_scan(r, arcsine_cdf);
        CHECK(scan <= ks + 1e-12);
        CHECK(ks - scan <= 1e-4);
    }
    SUBCASE("roots outside the interval are refused") {
        const RootSet wide = roots_via_jacobi(hermite_recurrence(6), 6);
        CHECK(wide.roots[5] > 1.0);
        CHECK_THROWS_AS(ks_to_arcsine(wide), out_of_support_error);
        CHECK_THROWS_AS(ks_distance({}, arcsine_cdf), std::invalid_argument);
    }
    SUBCASE("derivative roots approach the contracted equilibrium law") {
        // After k = tn derivatives the roots distribute (n large) with density
        // (1+a)/pi * sqrt(r^2-x^2)/(1-x^2) on [-r, r], a = t/(1-t),
        // r^2 = (1+2a)/(1+a)^2 -- the same limit for every starting weight.
        const double t = 1.0 / 3.0;
        const double a = t / (1.0 - t);
        const double r = std::sqrt(1.0 + 2.0 * a) / (1.0 + a);
        const int fine = 200000;
        std::vector<double> cum(fine + 1, 0.0);
        auto dens = [&](double x) {
            return (1.0 + a) / PI * std::sqrt(std::max(0.0, r * r - x * x)) / (1.0 - x * x);
        };
        for (int i = 1; i <= fine; ++i) {
            const double x0 = -r + 2.0 * r * (i - 1) / fine;
            const double x1 = -r + 2.0 * r * i / fine;
            cum[i] = cum[i - 1] + 0.5 * (dens(x0) + dens(x1)) * (x1 - x0);
        }
        auto limit_cdf = [&](double x) {
            if (x <= -r) return 0.0;
            if (x >= r) return 1.0;
            const double s = (x + r) / (2.0 * r) * fine;
            const int i = std::min(static_cast<int>(s), fine - 1);
            return (cum[i] + (s - i) * (cum[i + 1] - cum[i])) / cum[fine];
        };
        const int n = 60, k = 20;
        for (auto start : {legendre_recurrence(n), chebyshev_recurrence(n)}) {
            const RootSet rs = iterate_derivatives(roots_via_jacobi(start, n), k);
            REQUIRE(rs.degree() == n - k);
            CHECK(ks_distance(rs.roots, limit_cdf) <= 0.06);
        }
    }
}
