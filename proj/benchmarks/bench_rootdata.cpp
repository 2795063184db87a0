#include <benchmark/benchmark.h>

#include "lgk/lgroup.hpp"
#include "lgk/rootdata.hpp"

namespace {

void BM_WeylGroupA(benchmark::State& state) {
    const auto b = lgk::presets::sl(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgk::weyl_group(b));
}
BENCHMARK(BM_WeylGroupA)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_WeylGroupB(benchmark::State& state) {
    const auto b = lgk::presets::so(2 * static_cast<std::size_t>(state.range(0)) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(lgk::weyl_group(b));
}
BENCHMARK(BM_WeylGroupB)->Arg(2)->Arg(3)->Arg(4);

void BM_Dual(benchmark::State& state) {
    const auto b = lgk::presets::so(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgk::dual(b));
}
BENCHMARK(BM_Dual)->Arg(5)->Arg(8)->Arg(11);

void BM_ParabolicClasses(benchmark::State& state) {
    const auto b = lgk::presets::quasi_split_su(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgk::parabolic_classes(b));
}
BENCHMARK(BM_ParabolicClasses)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
