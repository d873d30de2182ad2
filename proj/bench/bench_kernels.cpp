// Serial reference vs OpenMP kernels.
//
//   ./build/bench/skia_bench --benchmark_filter=Mask

#include "skia/compare.hpp"
#include "skia/construction.hpp"
#include "skia/oracle.hpp"
#include "skia/reference.hpp"
#include "skia/shade_path.hpp"

#include <benchmark/benchmark.h>

namespace {

const skia::Torus3 kTorus{2.0, 1.0};

void BM_MaskSerial(benchmark::State& state) {
    for (auto _ : state) {
        auto m = skia::reference::visible_shade_mask_serial(kTorus, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(m.cells.data());
    }
}
BENCHMARK(BM_MaskSerial)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_MaskParallel(benchmark::State& state) {
    for (auto _ : state) {
        auto m = skia::visible_shade_mask(kTorus, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(m.cells.data());
    }
}
BENCHMARK(BM_MaskParallel)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ShadeFractionSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::reference::shade_fraction_serial(kTorus, 1024));
    }
}
BENCHMARK(BM_ShadeFractionSerial)->Unit(benchmark::kMillisecond);

void BM_ShadeFractionParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::shade_fraction(kTorus, 1024));
    }
}
BENCHMARK(BM_ShadeFractionParallel)->Unit(benchmark::kMillisecond);

struct Curves {
    skia::Polyline path;
    skia::Polyline outline;
};

const Curves& curves() {
    static const Curves c = [] {
        const skia::TorusElevationSpec spec(6.0, 2.0);
        const auto trace = skia::run_construction(spec);
        const auto path = skia::trace_shade_path(trace, 2048);
        auto outline = skia::extract_outline(skia::visible_shade_mask(kTorus, 1024));
        return Curves{skia::densify(path.samples, spec.extent() / 256.0),
                      skia::densify(outline.front(), spec.extent() / 256.0)};
    }();
    return c;
}

void BM_HausdorffSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::reference::curve_distances_serial(curves().path, curves().outline));
    }
}
BENCHMARK(BM_HausdorffSerial)->Unit(benchmark::kMillisecond);

void BM_HausdorffParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::curve_distances(curves().path, curves().outline));
    }
}
BENCHMARK(BM_HausdorffParallel)->Unit(benchmark::kMillisecond);

void BM_IouSerial(benchmark::State& state) {
    const auto outer = skia::terminator_loop(kTorus, true, 2048);
    const auto& outline = curves().outline;
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::reference::region_iou_raster_serial(outer, outline, 1024));
    }
}
BENCHMARK(BM_IouSerial)->Unit(benchmark::kMillisecond);

void BM_IouParallel(benchmark::State& state) {
    const auto outer = skia::terminator_loop(kTorus, true, 2048);
    const auto& outline = curves().outline;
    for (auto _ : state) {
        benchmark::DoNotOptimize(skia::region_iou(outer, outline, 1024));
    }
}
BENCHMARK(BM_IouParallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
