#include <benchmark/benchmark.h>

#include <set>

#include "toroidal/classify.hpp"
#include "toroidal/slopes.hpp"

using namespace toroidal;

namespace {

void BM_NormalizedSearch(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_good_configurations(OrderKind::Eisenstein6));
    }
}
BENCHMARK(BM_NormalizedSearch);

// The wide search the normalized one replaces: all 4-subsets of
// {inf} union {norm <= bound}.
void BM_BruteForceSearch(benchmark::State& state) {
    const OrderKind order = OrderKind::Eisenstein6;
    const Int bound = static_cast<Int>(state.range(0));
    std::vector<Slope> pool = {Slope::infinity(order)};
    for (Int a = -bound; a <= bound; ++a) {
        for (Int b = -bound; b <= bound; ++b) {
            const QuadInt x{a, b, order};
            if (norm(x) <= bound) pool.push_back(Slope::finite(x));
        }
    }
    for (auto _ : state) {
        std::set<Configuration> classes;
        const std::size_t n = pool.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l) {
                        const Configuration cfg(order, {pool[i], pool[j], pool[k], pool[l]});
                        if (is_good_configuration(cfg)) classes.insert(canonicalize(cfg));
                    }
        benchmark::DoNotOptimize(classes);
    }
    state.SetLabel("pool=" + std::to_string(pool.size()));
}
BENCHMARK(BM_BruteForceSearch)->Arg(3)->Arg(9);

void BM_Canonicalize(benchmark::State& state) {
    const OrderKind order = OrderKind::Eisenstein6;
    Configuration cfg(order, {Slope::infinity(order), Slope::finite({0, 0, order}),
                              Slope::finite({1, 0, order}), Slope::finite({0, 1, order})});
    cfg = mobius_apply(MobiusMap::shear({17, -6, order}), cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize(cfg));
    }
}
BENCHMARK(BM_Canonicalize);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_classification());
    }
}
BENCHMARK(BM_Classify);

} // namespace

BENCHMARK_MAIN();
