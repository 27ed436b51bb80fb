#include <benchmark/benchmark.h>

#include "goldlab/learners.hpp"
#include "goldlab/locking.hpp"
#include "goldlab/monitors.hpp"
#include "goldlab/transforms.hpp"

using namespace goldlab;

namespace {

void BM_RunTraceCofinite(benchmark::State& state) {
    ScopedRegistry scope;
    const auto inf = canonicalInformant(LangDescriptor::cofinite({3, 17}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(runTrace(learners::cofinite(), inf, static_cast<std::size_t>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunTraceCofinite)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_MonitorSuite(benchmark::State& state) {
    ScopedRegistry scope;
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto tr = runTrace(learners::splitFamily(), canonicalInformant(LangDescriptor::split({0, 1, 2, 3, 7})), n);
    const auto eq = EqOracle::exact(n);
    for (auto _ : state) {
        for (Restriction r : allRestrictions()) benchmark::DoNotOptimize(checkRestriction(r, tr, eq));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MonitorSuite)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_ConvSDecChain(benchmark::State& state) {
    ScopedRegistry scope;
    const auto inf = canonicalInformant(LangDescriptor::cofinite({2, 9}));
    for (auto _ : state) {
        // Learners memoize per instance; a fresh pipeline keeps iterations cold.
        const auto base = learners::uShaped(learners::cofinite(), 3, LangDescriptor::finite({0}));
        const auto m = convSDecTransform(synDecPad(totalize(base)));
        benchmark::DoNotOptimize(runTrace(m, inf, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_ConvSDecChain)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LockingSearch(benchmark::State& state) {
    ScopedRegistry scope;
    const auto l = LangDescriptor::cofinite({2});
    const Prefix sigma{{2, false}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lockingFalsifier(learners::cofinite(), l, sigma, static_cast<std::size_t>(state.range(0)), 6));
    }
}
BENCHMARK(BM_LockingSearch)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
