// Microbenchmarks for the hot paths: the spectral transform pair, the full
// interval transform, root extraction, one derivative pass, one PDE step,
// and the circle conjugation.  Run with --benchmark_filter=... to narrow.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "finhilb/airfoil.hpp"
#include "finhilb/cheb.hpp"
#include "finhilb/circle.hpp"
#include "finhilb/fht.hpp"
#include "finhilb/roots.hpp"
#include "finhilb/rootflow.hpp"

using namespace finhilb;

namespace {

GridFunction random_grid(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    GridFunction f;
    f.values.resize(n);
    for (auto& v : f.values) v = uni(rng);
    return f;
}

void bm_analyze(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GridFunction f = random_grid(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_T(f));
    state.SetComplexityN(n);
}

void bm_synth_grid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ChebSeries c = analyze_T(random_grid(n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(synth_grid(c, n));
    state.SetComplexityN(n);
}

void bm_fht_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // smooth input resolved at every benchmarked size
    GridFunction f;
    f.values.resize(n);
    const auto nodes = cheb_nodes(n);
    for (int j = 0; j < n; ++j) f.values[j] = std::exp(nodes[j]);
    FhtOptions opts;
    opts.enforce_tail = false;
    for (auto _ : state) benchmark::DoNotOptimize(fht_apply(f, opts));
    state.SetComplexityN(n);
}

void bm_conjugate(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto angles = circle_angles(m);
    CircleFunction g;
    g.values.resize(m);
    for (int i = 0; i < m; ++i)
        g.values[i] = std::sin(angles[i]) + 0.3 * std::cos(2.0 * angles[i]);
    for (auto _ : state) benchmark::DoNotOptimize(conjugate(g));
    state.SetComplexityN(m);
}

void bm_roots_via_jacobi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RecurrenceCoeffs rec = legendre_recurrence(n);
    for (auto _ : state) benchmark::DoNotOptimize(roots_via_jacobi(rec, n));
    state.SetComplexityN(n);
}

void bm_differentiate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RootSet rs = roots_via_jacobi(legendre_recurrence(n), n);
    for (auto _ : state) benchmark::DoNotOptimize(differentiate_rooted(rs));
    state.SetComplexityN(n);
}

void bm_pde_step(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const DensityProfile d = arcsine_profile(m);
    const double dt = 1.0 / m;
    for (auto _ : state) benchmark::DoNotOptimize(step(d, dt, 1e-8));
    state.SetComplexityN(m);
}

void bm_airfoil_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GridFunction g;
    g.values.resize(n);
    const auto nodes = cheb_nodes(n);
    for (int j = 0; j < n; ++j) g.values[j] = std::cos(3.0 * std::acos(nodes[j]));
    for (auto _ : state) benchmark::DoNotOptimize(airfoil_solve(g, 0.0, 1e-6));
    state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(bm_analyze)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(bm_synth_grid)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(bm_fht_apply)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(bm_conjugate)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(bm_roots_via_jacobi)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(bm_differentiate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(bm_pde_step)->RangeMultiplier(2)->Range(128, 1024)->Complexity();
BENCHMARK(bm_airfoil_solve)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

BENCHMARK_MAIN();
