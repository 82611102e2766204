#include <benchmark/benchmark.h>

#include <numbers>

#include "qwalk/qwalk.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const InitCoin kSymCoin{cd{kInvSqrt2, 0.0}, cd{0.0, kInvSqrt2}};

void BM_evolve(benchmark::State& state) {
    const std::int64_t steps = state.range(0);
    for (auto _ : state) {
        WalkState st = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta),
                              CoinAngle{kPi / 4.0}, steps);
        benchmark::DoNotOptimize(st.amps.data());
    }
    state.SetItemsProcessed(state.iterations() * steps * steps);  // ~cells touched
}
BENCHMARK(BM_evolve)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_synthesize(benchmark::State& state) {
    const std::size_t grid = static_cast<std::size_t>(state.range(0));
    const WeightSpec w = WeightSpec::uniform(CoinAngle{kPi / 4.0});
    for (auto _ : state) {
        auto r = synthesize_initial(w, kSymCoin, grid, 1e-8);
        benchmark::DoNotOptimize(r.state.amps.data());
    }
}
BENCHMARK(BM_synthesize)->Arg(1 << 14)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_kspace_moments(benchmark::State& state) {
    const SpectralContext ctx{CoinAngle{kPi / 4.0}};
    const WeightSpec w = WeightSpec::semicircle(ctx.theta);
    for (auto _ : state) {
        auto m = kspace_moments(w, ctx, kSymCoin, 8, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(m.data());
    }
}
BENCHMARK(BM_kspace_moments)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_density_eval(benchmark::State& state) {
    const SpectralContext ctx{CoinAngle{kPi / 4.0}};
    const TiltedDensity d = general_density(WeightSpec::arcsine(ctx.theta), ctx, kSymCoin);
    double x = -0.69;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.evaluate(x));
        x = x >= 0.69 ? -0.69 : x + 1e-4;
    }
}
BENCHMARK(BM_density_eval);

void BM_density_cdf(benchmark::State& state) {
    const SpectralContext ctx{CoinAngle{kPi / 4.0}};
    const TiltedDensity d = TiltedDensity::konno(ctx, kSymCoin);
    for (auto _ : state) benchmark::DoNotOptimize(density_cdf(d, 0.31));
}
BENCHMARK(BM_density_cdf);

}  // namespace

BENCHMARK_MAIN();
