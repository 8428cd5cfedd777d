#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "toroidal/lattice.hpp"

using namespace toroidal;

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(999);
    std::uniform_int_distribution<Int> dist(-static_cast<Int>(state.range(0)),
                                            static_cast<Int>(state.range(0)));
    std::vector<IntMat2> mats;
    for (int i = 0; i < 512; ++i) mats.push_back({dist(rng), dist(rng), dist(rng), dist(rng)});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(mats[i % mats.size()]));
        ++i;
    }
}
// Entry scales up to 1e4; the exact int64 kernel reports overflow on
// unimodular factors beyond that, far outside the norms the torsion
// computations produce.
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(1000)->Arg(10000);

void BM_QuotientReps(benchmark::State& state) {
    // gamma = k - t has norm k^2 + k + 1.
    const QuadInt gamma{static_cast<Int>(state.range(0)), -1, OrderKind::Eisenstein6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(quotient_reps(gamma));
    }
    state.SetLabel("norm=" + std::to_string(norm(gamma)));
}
BENCHMARK(BM_QuotientReps)->Arg(2)->Arg(5)->Arg(12)->Arg(30);

} // namespace

BENCHMARK_MAIN();
