// Microbenchmarks for the hot evaluation paths: invariant extraction,
// curvature assembly, focal-distance roots, and lightlike classification.

#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include <lcframed/config.hpp>
#include <lcframed/curvature.hpp>
#include <lcframed/focal.hpp>
#include <lcframed/framed_surface.hpp>
#include <lcframed/lightlike.hpp>

namespace {

const lcf::SurfaceDef& demo_surface() {
    static const lcf::SurfaceDef s = lcf::build_surface(lcf::builtin_surface("paper-example"));
    return s;
}

constexpr std::array<std::array<double, 2>, 8> kPoints{{
    {0.3, 0.2}, {1.1, 2.5}, {2.0, 0.7}, {2.9, 4.1},
    {3.6, 1.3}, {4.4, 5.0}, {5.2, 2.2}, {6.0, 3.7},
}};

void BM_invariants_at(benchmark::State& state) {
    const auto& s = demo_surface();
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = kPoints[k++ % kPoints.size()];
        benchmark::DoNotOptimize(lcf::invariants_at(s, p[0], p[1]));
    }
}
BENCHMARK(BM_invariants_at);

void BM_curvature_bundle(benchmark::State& state) {
    const auto& s = demo_surface();
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = kPoints[k++ % kPoints.size()];
        benchmark::DoNotOptimize(lcf::curvature_bundle(s, p[0], p[1]));
    }
}
BENCHMARK(BM_curvature_bundle);

void BM_mu_roots(benchmark::State& state) {
    const lcf::InvariantField f = lcf::invariants_at(demo_surface(), 2.0, 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcf::mu_roots(f));
    }
}
BENCHMARK(BM_mu_roots);

void BM_classify_lightlike(benchmark::State& state) {
    const auto& s = demo_surface();
    const double u0 = std::acos(-1.0) / 4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcf::classify_lightlike(s, u0, 1.0));
    }
}
BENCHMARK(BM_classify_lightlike);

} // namespace

BENCHMARK_MAIN();
