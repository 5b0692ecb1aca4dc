#include <benchmark/benchmark.h>

#include "stern/rules.hpp"
#include "stern/sigma.hpp"
#include "stern/tau.hpp"
#include "stern/tilings.hpp"

namespace {

using namespace stern;

void BM_Supertile(benchmark::State& state) {
    const Ring r(3);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(supertile(r, up_tile(1, 2, 0), k));
    const auto n = static_cast<std::int64_t>(1) << k;
    state.SetItemsProcessed(state.iterations() * (n + 1) * (n + 2) / 2);
}
BENCHMARK(BM_Supertile)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

// The table-driven engine on the same rule, for comparison with the midpoint fast path.
void BM_SupertileTable(benchmark::State& state) {
    const Ring r(3);
    const SubstRule& rule = variant_rule(RuleId::sigma);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(supertile_with(rule, r, up_tile(1, 2, 0), k));
}
BENCHMARK(BM_SupertileTable)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_HPatch(benchmark::State& state) {
    const Ring r(3);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(h_patch(r, 1, 2, k));
}
BENCHMARK(BM_HPatch)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TauWord(benchmark::State& state) {
    const Ring r(5);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tau_word(r, {1, 2}, k));
    state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << k) + 1));
}
BENCHMARK(BM_TauWord)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Fusc(benchmark::State& state) {
    std::uint64_t n = 0x9e3779b97f4a7c15ULL >> 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fusc(n));
        n = n * 6364136223846793005ULL + 1442695040888963407ULL;
        n >>= 1;
    }
}
BENCHMARK(BM_Fusc);

}  // namespace
