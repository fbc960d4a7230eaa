#include <benchmark/benchmark.h>

#include <cmath>

#include "collectivity/ensemble.hpp"

namespace {

using namespace collectivity;

const PulseShape kPulse{PulseKind::gaussian, 2.0 * M_PI, 0.2, 0.1};

void BM_IntegrateSingleAtom(benchmark::State& state) {
    const double dt = 1.0 / static_cast<double>(state.range(0));
    const AtomParams atom{2.0 * M_PI * 1250.0, 0.0};
    for (auto _ : state) {
        auto traj = integrate_two_level(kPulse, atom, 0.5, 0.5 * dt);
        benchmark::DoNotOptimize(traj.beta.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) / 2);
}
BENCHMARK(BM_IntegrateSingleAtom)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_RunEnsemble(benchmark::State& state) {
    EnsembleParams params;
    params.pulse = kPulse;
    params.dist = {2.0 * M_PI * 500.0, 2.0 * M_PI * 1250.0};
    params.t_end = 0.5;
    params.dt = 1e-4;
    params.n_nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto result = run_ensemble(params);
        benchmark::DoNotOptimize(result.p_e.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunEnsemble)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_CollectivityReduction(benchmark::State& state) {
    const auto grid = build_grid(SpectralDistribution{2.0 * M_PI * 500.0, 0.0},
                                 static_cast<std::size_t>(state.range(0)), 5.0);
    const auto betas = ensemble_trajectories(kPulse, grid, 0.0, 0.5, 1e-3);
    for (auto _ : state) {
        for (std::size_t k = 0; k < betas.times.size(); ++k) {
            auto c = collectivity::collectivity(betas, grid, k);
            benchmark::DoNotOptimize(c);
        }
    }
    state.SetItemsProcessed(state.iterations() * betas.times.size());
}
BENCHMARK(BM_CollectivityReduction)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
