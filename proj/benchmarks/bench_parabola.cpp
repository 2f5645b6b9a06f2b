#include <benchmark/benchmark.h>

#include <numbers>

#include "phoncas/parabola.hpp"

using namespace phoncas;

namespace {
const FluidMedium& water() {
    static const auto reg = MediumRegistry::with_builtins();
    return reg.at("water_293K");
}
constexpr double kGamma = std::numbers::pi / 2;
} // namespace

static void SolveRayPair(benchmark::State& state) {
    const MirrorSpec m{1.0, 2.0};
    const FieldPoint p{1e-4, kGamma};
    for (auto _ : state) {
        auto rp = solve_ray_pair(m, p, 0.5e-4);
        benchmark::DoNotOptimize(rp.delta_ell);
    }
}
BENCHMARK(SolveRayPair);

static void VarianceNearFocus(benchmark::State& state) {
    const MirrorSpec m{1.0, 2.0};
    const FieldPoint p{1e-4, kGamma};
    for (auto _ : state) {
        auto r = variance_near_focus(water(), m, p, kappa_default());
        benchmark::DoNotOptimize(r.variance.value);
    }
}
BENCHMARK(VarianceNearFocus);

BENCHMARK_MAIN();
