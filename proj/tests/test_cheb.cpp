#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "finhilb/cheb.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace finhilb;

namespace {
const double PI = std::acos(-1.0);
}

TEST_CASE("grid geometry: mirror symmetry, middle node, closed forms") {
    SUBCASE("n = 1 grid is exactly {0}") {
        const auto x = cheb_nodes(1);
        REQUIRE(x.size() == 1);
        CHECK(x[0] == 0.0);
        CHECK(cheb_sines(1)[0] == 1.0);
    }
    SUBCASE("n = 2 nodes are +-1/sqrt(2)") {
        const auto x = cheb_nodes(2);
        CHECK_ABS(x[0], std::sqrt(0.5), 1e-16);
        CHECK(x[1] == -x[0]);
    }
    for (int n : {3, 8, 17, 64}) {
        CAPTURE(n);
        const auto x = cheb_nodes(n);
        const auto th = cheb_angles(n);
        const auto s = cheb_sines(n);
        for (int j = 0; j < n; ++j) {
            CHECK_ABS(x[j], std::cos((2 * j + 1) * PI / (2 * n)), 1e-15);
            CHECK(x[n - 1 - j] == -x[j]);  // exact mirror
            CHECK_ABS(s[j], std::sqrt(1.0 - x[j] * x[j]), 1e-15);
            CHECK_ABS(th[j], (2 * j + 1) * PI / (2 * n), 1e-14);
        }
        if (n % 2 == 1) {
            CHECK(x[n / 2] == 0.0);
            CHECK(s[n / 2] == 1.0);
        }
        for (int j = 0; j + 1 < n; ++j) CHECK(x[j] > x[j + 1]);
    }
}

TEST_CASE("analyze_T recovers known expansions") {
    SUBCASE("x^5 = (10 T_1 + 5 T_3 + T_5)/16") {
        const GridFunction f = GridFunction::sample([](double x) { return std::pow(x, 5); }, 8);
        const ChebSeries a = analyze_T(f);
        CHECK_ABS(a[0], 0.0, 1e-15);
        CHECK_ABS(a[1], 5.0 / 8.0, 1e-15);
        CHECK_ABS(a[2], 0.0, 1e-15);
        CHECK_ABS(a[3], 5.0 / 16.0, 1e-15);
        CHECK_ABS(a[4], 0.0, 1e-15);
        CHECK_ABS(a[5], 1.0 / 16.0, 1e-15);
        CHECK_ABS(a[6], 0.0, 1e-15);
        CHECK_ABS(a[7], 0.0, 1e-15);
    }
    SUBCASE("each T_k is recovered exactly through degree n-1") {
        const int n = 12;
        for (int k = 0; k < n; ++k) {
            const GridFunction f =
                GridFunction::sample([k](double x) { return oracles::T(k, x); }, n);
            const ChebSeries a = analyze_T(f);
            for (int i = 0; i < n; ++i) CHECK_ABS(a[i], i == k ? 1.0 : 0.0, 1e-13);
        }
    }
    SUBCASE("matches the direct cosine-sum analysis on random data") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (int n : {1, 2, 5, 16, 33, 128}) {
            GridFunction f;
            f.values.resize(n);
            for (auto& v : f.values) v = uni(rng);
            const ChebSeries a = analyze_T(f);
            const std::vector<double> ref = oracles::direct_analyze_T(f.values);
            REQUIRE(a.size() == static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) CHECK_ABS(a[k], ref[k], 1e-12);
        }
    }
}

TEST_CASE("synth agrees with direct basis summation and round-trips") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SUBCASE("T series") {
        std::vector<double> c(20);
        for (auto& v : c) v = uni(rng);
        const ChebSeries s(Basis::FirstKind, c);
        for (double x : {-1.0, -0.9, -0.33, 0.0, 0.123456, 0.5, 0.99, 1.0})
            CHECK_ABS(synth(s, x), oracles::eval_T_series(c, x), 1e-12);
        CHECK_THROWS_AS(synth(s, 1.0 + 1e-12), std::domain_error);
    }
    SUBCASE("U series") {
        std::vector<double> c(17);
        for (auto& v : c) v = uni(rng);
        const ChebSeries s(Basis::SecondKind, c);
        for (double x : {-0.99, -0.5, 0.0, 0.25, 0.875})
            CHECK_ABS(synth(s, x), oracles::eval_U_series(c, x), 1e-12);
    }
    SUBCASE("analyze o synth_grid is the identity on coefficients") {
        for (int n : {4, 9, 32}) {
            std::vector<double> c(n);
            for (auto& v : c) v = uni(rng);
            const ChebSeries s(Basis::FirstKind, c);
            const GridFunction g = synth_grid(s, n);
            const ChebSeries back = analyze_T(g);
            for (int k = 0; k < n; ++k) CHECK_ABS(back[k], c[k], 1e-13);
        }
    }
    SUBCASE("synth_grid matches pointwise synth for both bases") {
        std::vector<double> c(10);
        for (auto& v : c) v = uni(rng);
        for (Basis b : {Basis::FirstKind, Basis::SecondKind}) {
            const ChebSeries s(b, c);
            const int n = 25;
            const GridFunction g = synth_grid(s, n);
            const auto x = cheb_nodes(n);
            for (int j = 0; j < n; ++j) CHECK_ABS(g.values[j], synth(s, x[j]), 1e-12);
        }
    }
    SUBCASE("grid shorter than the series still evaluates (slow path)") {
        std::vector<double> c(30);
        for (auto& v : c) v = uni(rng);
        const ChebSeries s(Basis::FirstKind, c);
        const GridFunction g = synth_grid(s, 8);
        const auto x = cheb_nodes(8);
        for (int j = 0; j < 8; ++j) CHECK_ABS(g.values[j], oracles::eval_T_series(c, x[j]), 1e-12);
    }
}

TEST_CASE("gauss_cheb_quad: closed-form moments and exact odd cancellation") {
    // integral of x^m / sqrt(1-x^2): pi, 0, pi/2, 0, 3pi/8, 0, 5pi/16
    const double expected[] = {PI, 0.0, PI / 2, 0.0, 3 * PI / 8, 0.0, 5 * PI / 16};
    for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        const GridFunction f = GridFunction::sample([m](double x) { return std::pow(x, m); }, 16);
        const double q = gauss_cheb_quad(f);
        if (m % 2 == 1) {
            CHECK(q == 0.0);  // mirror-paired summation cancels exactly
        } else {
            CHECK_ABS(q, expected[m], 1e-14);
        }
    }
    SUBCASE("f = 1 integrates to pi for every n") {
        for (int n : {1, 2, 7, 100}) {
            const GridFunction one = GridFunction::sample([](double) { return 1.0; }, n);
            CHECK_ABS(gauss_cheb_quad(one), PI, 1e-13);
        }
    }
}

TEST_CASE("weighted norms against closed forms") {
    // T_1/sqrt(1-x^2) has Sqrt-weighted square norm integral x^2/sqrt = pi/2
    const int n = 64;
    const auto xs = cheb_nodes(n);
    const auto s = cheb_sines(n);
    GridFunction f;
    f.values.resize(n);
    for (int j = 0; j < n; ++j) f.values[j] = xs[j] / s[j];
    CHECK_ABS(weighted_norm_sq(f, Weight::Sqrt), PI / 2, 1e-13);

    // InvSqrt norm of f = x is the same integral
    const GridFunction id = GridFunction::sample([](double x) { return x; }, n);
    CHECK_ABS(weighted_norm_sq(id, Weight::InvSqrt), PI / 2, 1e-13);

    // Sqrt-weight damps where InvSqrt amplifies
    CHECK(weighted_norm_sq(id, Weight::Sqrt) <= weighted_norm_sq(id, Weight::InvSqrt));
}

TEST_CASE("tail diagnostic flags slow decay and passes resolved series") {
    SUBCASE("resolved analytic series") {
        const GridFunction f = GridFunction::sample([](double x) { return std::exp(x); }, 64);
        const TailDiagnostic d = tail_diagnostic(analyze_T(f));
        CHECK(d.ok);
        CHECK(d.ratio <= 1e-8);
        CHECK(d.total_mass > 0.0);
    }
    SUBCASE("sign function does not resolve") {
        const GridFunction f =
            GridFunction::sample([](double x) { return x >= 0.0 ? 1.0 : -1.0; }, 128);
        const TailDiagnostic d = tail_diagnostic(analyze_T(f));
        CHECK_FALSE(d.ok);
        CHECK(d.ratio > 1e-8);
        CHECK(d.max_tail_coeff > 0.0);
    }
    SUBCASE("tolerance is honored") {
        const GridFunction f =
            GridFunction::sample([](double x) { return x >= 0.0 ? 1.0 : -1.0; }, 128);
        const TailDiagnostic loose = tail_diagnostic(analyze_T(f), 1.0);
        CHECK(loose.ok);
    }
}

TEST_CASE("ChebSeries validation") {
    CHECK_THROWS_AS(ChebSeries(Basis::FirstKind, {1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(ChebSeries(Basis::FirstKind, {1.0, INFINITY}), std::invalid_argument);
    const ChebSeries empty;
    CHECK(empty.size() == 0);
    CHECK(empty.degree() == -1);
    CHECK(empty[3] == 0.0);
    CHECK(synth(empty, 0.5) == 0.0);
}
