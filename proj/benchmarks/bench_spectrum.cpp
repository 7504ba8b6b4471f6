#include <benchmark/benchmark.h>

#include "specvar/joins.hpp"
#include "specvar/weight_system.hpp"

using namespace specvar;

namespace {

void BM_SpectrumFromWeights(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    std::vector<Rational> ws(4, Rational(1, a));
    for (auto _ : state) {
        const WeightSystem w(ws);
        benchmark::DoNotOptimize(spectrum_from_weights(w));
    }
}
BENCHMARK(BM_SpectrumFromWeights)->Arg(3)->Arg(6)->Arg(12);

void BM_VarianceIdentity(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const WeightSystem w(std::vector<Rational>(3, Rational(1, a)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_variance_identity(w));
}
BENCHMARK(BM_VarianceIdentity)->Arg(5)->Arg(12);

void BM_CharacteristicDivision(benchmark::State& state) {
    // D-series style weights exercise the joint-divisibility path.
    const int k = static_cast<int>(state.range(0));
    const std::vector<Rational> ws = {Rational(k - 2, 2 * (k - 1)), Rational(1, k - 1)};
    for (auto _ : state) {
        const WeightSystem w(ws);
        benchmark::DoNotOptimize(w.characteristic_product());
    }
}
BENCHMARK(BM_CharacteristicDivision)->Arg(8)->Arg(20)->Arg(60);

void BM_Join(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const Spectrum s = brieskorn_pham({a, a});
    for (auto _ : state) benchmark::DoNotOptimize(join(s, s));
}
BENCHMARK(BM_Join)->Arg(4)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
