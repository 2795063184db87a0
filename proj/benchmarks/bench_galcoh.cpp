#include <benchmark/benchmark.h>

#include "lgk/galcoh.hpp"

namespace {

void BM_Coinvariants(benchmark::State& state) {
    const auto b = lgk::presets::by_name("ResGm", {state.range(0)});
    for (auto _ : state) benchmark::DoNotOptimize(lgk::coinvariants(b.lattice));
}
BENCHMARK(BM_Coinvariants)->Arg(2)->Arg(4)->Arg(8);

void BM_TateHMinus1(benchmark::State& state) {
    const auto b = lgk::presets::by_name("ResGm", {state.range(0)});
    for (auto _ : state) benchmark::DoNotOptimize(lgk::tate_h_minus1(b.lattice));
}
BENCHMARK(BM_TateHMinus1)->Arg(2)->Arg(4)->Arg(8);

void BM_AlphaTarget(benchmark::State& state) {
    const auto b = lgk::presets::pgl(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgk::alpha_target(b));
}
BENCHMARK(BM_AlphaTarget)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
