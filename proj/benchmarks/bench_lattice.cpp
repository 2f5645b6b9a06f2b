#include <benchmark/benchmark.h>

#include "phoncas/boundaries.hpp"

using namespace phoncas;

namespace {
const FluidMedium& water() {
    static const auto reg = MediumRegistry::with_builtins();
    return reg.at("water_293K");
}
} // namespace

static void TorusShellSum(benchmark::State& state) {
    const Torus3 t{1e-6, 1e-6, 1e-6};
    const int shells = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = torus_shell_sum(t, shells);
        benchmark::DoNotOptimize(r.sum);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TorusShellSum)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void TorusClosedExtrapolated(benchmark::State& state) {
    const Torus3 t{1e-6, 1.3e-6, 0.8e-6};
    for (auto _ : state) {
        auto v = variance_closed(water(), t, 1e-8);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(TorusClosedExtrapolated);

static void SlabImageSum(benchmark::State& state) {
    const ParallelSlab slab{1e-6, 3e-7};
    for (auto _ : state) {
        auto v = variance_image_sum(water(), slab, 1e-10);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(SlabImageSum);

static void DiscrepancyReportSlab(benchmark::State& state) {
    const ParallelSlab slab{1e-6, 3e-7};
    for (auto _ : state) {
        auto rep = discrepancy_report(water(), slab, 1e-8);
        benchmark::DoNotOptimize(rep.ratio_printed_over_image);
    }
}
BENCHMARK(DiscrepancyReportSlab);

BENCHMARK_MAIN();
