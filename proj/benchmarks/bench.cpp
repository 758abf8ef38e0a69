#include "ukoszul/cohomology.hpp"
#include "ukoszul/uk.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ukoszul;

void BM_SubspaceEnumeration(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_subspace(n, 2, kDefaultSubspaceBudget,
                          [&](const Subspace& s) { count += s.dim() + 1; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SubspaceEnumeration)->Arg(2)->Arg(3)->Arg(4);

void BM_BuildModel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto pres = exterior_presentation(n, 2);
    for (auto _ : state) {
        auto model = build_model(pres, 4, 1 << 20);
        benchmark::DoNotOptimize(model->piece_dims());
    }
}
BENCHMARK(BM_BuildModel)->Arg(2)->Arg(3)->Arg(4);

void BM_Multiply(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto model = build_model(exterior_presentation(n, 2), 4, 1 << 20);
    GradedElement a{1, std::vector<std::uint16_t>(n, 1)};
    GradedElement b{2, std::vector<std::uint16_t>(model->dim(2), 1)};
    for (auto _ : state) {
        auto c = multiply(*model, a, b);
        benchmark::DoNotOptimize(c.coords);
    }
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(4)->Arg(5);

void BM_CheckUK(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto model = build_model(exterior_presentation(n, 2), 4, 1 << 20);
    for (auto _ : state) {
        auto report = check_universal_koszul(model, UKStrategy::exhaustive(), 3);
        benchmark::DoNotOptimize(report.checked_pairs);
    }
}
BENCHMARK(BM_CheckUK)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
