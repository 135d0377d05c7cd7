#include <random>

#include <benchmark/benchmark.h>

#include "twgamma/gamma_filtration.hpp"
#include "twgamma/k0_ring.hpp"
#include "twgamma/witness.hpp"

using namespace twgamma;

namespace {

K0RingPtr ring_of(const std::string& group, const std::string& iso) {
    return build_k0(character_quotient(RootSystemSpec::parse(group), IsogenySpec::parse(iso)));
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-50, 50);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_WeylDimensions(benchmark::State& state) {
    const RootDatum e8({Series::E, 8});
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_dimensions(e8));
}
BENCHMARK(BM_WeylDimensions);

void BM_BuildK0(benchmark::State& state) {
    static const char* groups[] = {"E7", "D4", "A7", "E6"};
    const auto cq = character_quotient(RootSystemSpec::parse(groups[state.range(0)]), IsogenySpec::parse("ad"));
    state.SetLabel(groups[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(build_k0(cq));
}
BENCHMARK(BM_BuildK0)->DenseRange(0, 3);

void BM_TwistedFiltrationPGO8(benchmark::State& state) {
    const auto d4 = ring_of("D4", "ad");
    TitsIndexAssignment ind(*d4->group());
    ind.set(d4->group()->make({1, 0}), 4);
    ind.set(d4->group()->make({0, 1}), 4);
    ind.set(d4->group()->make({1, 1}), 2);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_filtration(d4, ind, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TwistedFiltrationPGO8)->Arg(3)->Arg(5)->Arg(8);

void BM_SplitFiltrationA7(benchmark::State& state) {
    const auto a7 = ring_of("A7", "ad");
    for (auto _ : state) benchmark::DoNotOptimize(split_filtration(a7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SplitFiltrationA7)->Arg(3)->Arg(5);

void BM_HSpinWitness(benchmark::State& state) {
    const auto d32 = ring_of("D32", "hs");
    for (auto _ : state) benchmark::DoNotOptimize(hspin_witness_check(d32, 5));
}
BENCHMARK(BM_HSpinWitness);

}  // namespace
BENCHMARK_MAIN();
