#include <benchmark/benchmark.h>

#include "phoncas/freefield.hpp"

using namespace phoncas;

namespace {
const FluidMedium& water() {
    static const auto reg = MediumRegistry::with_builtins();
    return reg.at("water_293K");
}
} // namespace

static void CorrClosed(benchmark::State& state) {
    const Separation sep{{1e-8, 2e-9, 0}, 1e-12};
    for (auto _ : state) {
        auto v = corr_closed(water(), sep);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(CorrClosed);

static void CorrModeIntegralSpacelike(benchmark::State& state) {
    const Separation sep{{1e-8, 0, 0}, 0.0};
    const double eps = suggest_epsilon(water(), sep);
    for (auto _ : state) {
        auto v = corr_mode_integral(water(), sep, eps);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(CorrModeIntegralSpacelike);

static void CorrModeIntegralTimelike(benchmark::State& state) {
    const Separation sep{{0, 0, 0}, 2e-11};
    const double eps = suggest_epsilon(water(), sep);
    for (auto _ : state) {
        auto v = corr_mode_integral(water(), sep, eps);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(CorrModeIntegralTimelike);

BENCHMARK_MAIN();
