#include <benchmark/benchmark.h>

#include "tqgate/interference.hpp"
#include "tqgate/oracle.hpp"
#include "tqgate/scattering.hpp"
#include "tqgate/sweep.hpp"

using namespace tqgate;

static void BM_ClosedFormIbf(benchmark::State& state) {
    ScenarioPreset p = preset_scenario2();
    InterferenceConfig cfg;
    cfg.detection_time = 100e-9;
    cfg.delta_t = p.delta_t;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ibf_fidelity(cfg, p.cavity, p.emitter));
        benchmark::DoNotOptimize(ibf_efficiency(cfg, p.cavity, p.detection));
    }
}
BENCHMARK(BM_ClosedFormIbf);

static void BM_BuildLiouvillian(benchmark::State& state) {
    ScenarioPreset p = preset_scenario1();
    for (auto _ : state) {
        TwoEmitterLiouvillian liou(p.emitter, p.cavity, p.detection);
        benchmark::DoNotOptimize(liou.full().norm());
    }
}
BENCHMARK(BM_BuildLiouvillian);

static void BM_WindowIntegral(benchmark::State& state) {
    ScenarioPreset p = preset_scenario1();
    TwoEmitterLiouvillian liou(p.emitter, p.cavity, p.detection);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            propagator_integral(liou.conditional(), 200e-9).norm());
    }
}
BENCHMARK(BM_WindowIntegral);

static void BM_SimulateIbf(benchmark::State& state) {
    ScenarioPreset p = preset_scenario1();
    for (auto _ : state) {
        OracleResult r = simulate_ibf(p.emitter, p.cavity, p.detection, 200e-9, p.delta_t);
        benchmark::DoNotOptimize(r.fidelity);
    }
}
BENCHMARK(BM_SimulateIbf);

static void BM_SigmaOptimizer(benchmark::State& state) {
    EmitterParams e = preset_scenario2().emitter;
    ScatteringConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sb_sigma_opt_numeric(74.0, e, cfg).sigma_p);
    }
}
BENCHMARK(BM_SigmaOptimizer);

static void BM_Sweep1k(benchmark::State& state) {
    SweepSpec spec;
    spec.scheme = Scheme::ibf;
    spec.axis = {"scheme.detection_time", 1e-9, 1e-6, 1000, SweepScale::log};
    ScenarioPreset base = preset_scenario2();
    for (auto _ : state) {
        SweepResult r = run_sweep(spec, base);
        benchmark::DoNotOptimize(r.rows.back().metrics.fidelity);
    }
}
BENCHMARK(BM_Sweep1k);

BENCHMARK_MAIN();
