#include "qdepth/alpha.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/qdepth.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/veronese.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

// Level scan over all d on a wide closed-form alpha (no enumeration).
void BM_QdepthFromAlphaVeronese(benchmark::State& state) {
    const auto alpha =
        qdepth::alpha_veronese(static_cast<std::size_t>(state.range(0)), 6,
                               qdepth::ModuleMode::ideal);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdepth::qdepth_from_alpha(alpha).value);
    }
}
BENCHMARK(BM_QdepthFromAlphaVeronese)->Arg(41)->Arg(61);

void BM_PosetEnumeration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ideal = qdepth::veronese_ideal(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qdepth::build_poset(ideal, qdepth::MonomialIdeal::zero(n)).size());
    }
}
BENCHMARK(BM_PosetEnumeration)->Arg(16)->Arg(20);

void BM_AlphaCI(benchmark::State& state) {
    const std::vector<uint32_t> degs{1, 1, 2, 2, 3, 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qdepth::alpha_ci(12, degs, qdepth::ModuleMode::quotient).total());
    }
}
BENCHMARK(BM_AlphaCI);

void BM_SdepthSearch(benchmark::State& state) {
    const auto ideal = qdepth::veronese_ideal(5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qdepth::sdepth(ideal, qdepth::MonomialIdeal::zero(5)).value);
    }
}
BENCHMARK(BM_SdepthSearch);

} // namespace

BENCHMARK_MAIN();
