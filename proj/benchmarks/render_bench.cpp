#include <benchmark/benchmark.h>

#include "stern/render.hpp"
#include "stern/sigma.hpp"

namespace {

using namespace stern;

void BM_RenderPpm(benchmark::State& state) {
    const TriPatch p = supertile(Ring(3), up_tile(1, 2, 0), 8);
    RenderOptions o;
    o.scale = 2;
    o.fill = state.range(0) == 0 ? FillMode::points : FillMode::tiles;
    for (auto _ : state) benchmark::DoNotOptimize(render(p, o));
}
BENCHMARK(BM_RenderPpm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
    const TriPatch p = supertile(Ring(3), up_tile(1, 2, 0), 6);
    RenderOptions o;
    o.format = ImageFormat::svg;
    for (auto _ : state) benchmark::DoNotOptimize(render(p, o));
}
BENCHMARK(BM_RenderSvg)->Unit(benchmark::kMillisecond);

}  // namespace
