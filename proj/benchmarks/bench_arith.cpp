#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "toroidal/quadint.hpp"

using namespace toroidal;

namespace {

std::vector<QuadInt> random_elements(OrderKind order, std::size_t count, Int box) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Int> dist(-box, box);
    std::vector<QuadInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(dist(rng), order == OrderKind::Rational ? 0 : dist(rng), order);
    return out;
}

void BM_QuadIntMul(benchmark::State& state) {
    const auto xs = random_elements(OrderKind::Eisenstein6, 1024, 1000);
    std::size_t i = 0;
    for (auto _ : state) {
        const QuadInt& x = xs[i % xs.size()];
        const QuadInt& y = xs[(i + 7) % xs.size()];
        benchmark::DoNotOptimize(x * y);
        ++i;
    }
}
BENCHMARK(BM_QuadIntMul);

void BM_Norm(benchmark::State& state) {
    const auto xs = random_elements(OrderKind::Eisenstein6, 1024, 1000000);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm(xs[i % xs.size()]));
        ++i;
    }
}
BENCHMARK(BM_Norm);

void BM_TryDivExact(benchmark::State& state) {
    const auto xs = random_elements(OrderKind::Gaussian, 1024, 1000);
    std::size_t i = 0;
    for (auto _ : state) {
        const QuadInt& x = xs[i % xs.size()];
        const QuadInt& y = xs[(i + 3) % xs.size()];
        if (!y.is_zero()) benchmark::DoNotOptimize(try_div_exact(x * y, y));
        ++i;
    }
}
BENCHMARK(BM_TryDivExact);

void BM_ParseRender(benchmark::State& state) {
    const auto xs = random_elements(OrderKind::Eisenstein6, 256, 100000);
    std::size_t i = 0;
    for (auto _ : state) {
        const QuadInt& x = xs[i % xs.size()];
        benchmark::DoNotOptimize(parse_quadint(render(x), OrderKind::Eisenstein6));
        ++i;
    }
}
BENCHMARK(BM_ParseRender);

} // namespace

BENCHMARK_MAIN();
