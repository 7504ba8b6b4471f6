#include <benchmark/benchmark.h>

#include "specvar/frobenius/gfunction.hpp"
#include "specvar/frobenius/socle.hpp"
#include "specvar/frobenius/tau.hpp"

using namespace specvar::frob;

namespace {

Vec generic_point(int m) {
    Vec t = Vec::Zero(m);
    t(0) = Complex(0.2, 0.1);
    t(1) = Complex(1.1, 0.4);
    for (int i = 2; i < m; ++i) t(i) = Complex(0.5 + 0.1 * i, 0.0);
    return t;
}

void BM_DlogTau(benchmark::State& state) {
    const FrobeniusModel model(5, static_cast<int>(state.range(0)),
                               MetricKind::flat_potential);
    const Vec t = generic_point(model.m());
    for (auto _ : state) benchmark::DoNotOptimize(dlog_tau_at(model, t));
}
BENCHMARK(BM_DlogTau)->Arg(2)->Arg(4)->Arg(8);

void BM_CausticResidue(benchmark::State& state) {
    const FrobeniusModel model(static_cast<int>(state.range(0)), 3,
                               MetricKind::flat_potential);
    for (auto _ : state) benchmark::DoNotOptimize(caustic_residue(model));
}
BENCHMARK(BM_CausticResidue)->Arg(3)->Arg(6);

void BM_DeltaG(benchmark::State& state) {
    const FrobeniusModel model(static_cast<int>(state.range(0)), 2,
                               MetricKind::flat_potential);
    Vec a = Vec::Zero(2), b = Vec::Zero(2);
    a(1) = Complex(1.0, 0.0);
    b(1) = Complex(2.718281828459045, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(g_function_delta(model, {a, b}));
}
BENCHMARK(BM_DeltaG)->Arg(3)->Arg(6);

void BM_DetHopSymbolic(benchmark::State& state) {
    const FrobeniusModel model(6, static_cast<int>(state.range(0)), MetricKind::test_metric);
    for (auto _ : state) benchmark::DoNotOptimize(det_hop_symbolic(model));
}
BENCHMARK(BM_DetHopSymbolic)->Arg(2)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
