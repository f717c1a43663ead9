#include "hnus/experiment.hpp"
#include "hnus/hankel.hpp"
#include "hnus/sampling.hpp"
#include "hnus/signal.hpp"
#include "hnus/solvers.hpp"

#include <benchmark/benchmark.h>

using namespace hnus;

namespace {

TrialData bench_trial(int order, double rate) {
    ExperimentSpec spec;
    spec.orders = {order};
    spec.rates = {rate};
    return make_trial(spec, 0, 0, 0);
}

void BM_Hankelize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TimeSignal x = synthesize(presets::five_peak_model(), n);
    const HankelShape shape = HankelShape::square_for(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hankelize(x, shape));
    }
}
BENCHMARK(BM_Hankelize)->Arg(255)->Arg(1023);

void BM_Dehankelize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix m = hankelize(synthesize(presets::five_peak_model(), n), HankelShape::square_for(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dehankelize(m));
    }
}
BENCHMARK(BM_Dehankelize)->Arg(255)->Arg(1023);

void BM_Svt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = 2 * n - 1;
    const SamplingMask mask = make_mask({len, 0.25});
    const ComplexMatrix m = hankelize(zero_fill(undersample(synthesize(presets::five_peak_model(), len), mask), mask),
                                      HankelShape::square_for(len));
    for (auto _ : state) {
        benchmark::DoNotOptimize(svt(m, 0.5));
    }
}
BENCHMARK(BM_Svt)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_PoissonGap(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(poisson_gap_mask({static_cast<int>(state.range(0)), 0.25, SamplingPattern::poisson_gap, seed++}));
    }
}
BENCHMARK(BM_PoissonGap)->Arg(255)->Arg(4096);

template <Method M>
void BM_Reconstruct(benchmark::State& state) {
    const TrialData t = bench_trial(static_cast<int>(state.range(0)), 0.25);
    MethodConfigs configs;
    configs.lrhmf.track_nuclear_norm = false;
    configs.lrhm.track_nuclear_norm = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(M, t.measured, t.mask, configs, 0.05));
    }
}
BENCHMARK_TEMPLATE(BM_Reconstruct, Method::cs)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Reconstruct, Method::lrhmf)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Reconstruct, Method::lrhm)->Arg(5)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
