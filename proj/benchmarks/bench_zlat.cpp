#include <benchmark/benchmark.h>

#include <random>

#include "lgk/zlat.hpp"

namespace {

lgk::IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-20, 20);
    lgk::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    const lgk::IntMatrix m = random_matrix(n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(lgk::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Cokernel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(8);
    const lgk::IntMatrix m = random_matrix(n, n + 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(lgk::cokernel(m));
}
BENCHMARK(BM_Cokernel)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
