// Serial reference vs OpenMP rollout collection, plus the raw physics step.
// The parallel variants are parameterized by worker count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "quadlab/config.hpp"
#include "quadlab/rollout.hpp"

using namespace quadlab;

namespace {

const RunConfig& bench_config() {
  static const RunConfig cfg = load_run_config(QUADLAB_CONFIG_DIR "/trot_default.json");
  return cfg;
}

ActorCritic bench_policy(const RunConfig& cfg) {
  ActorCritic ac(observation_dim(cfg.env.observation), kNumJoints, cfg.ppo.hidden_size, cfg.ppo.log_std, 100.0);
  Rng rng = make_stream(7, kInitStream);
  ac.init(rng);
  return ac;
}

constexpr int kEnvs = 16;
constexpr int kHorizon = 40;

void BM_RolloutSerial(benchmark::State& state) {
  const RunConfig& cfg = bench_config();
  const ActorCritic ac = bench_policy(cfg);
  EnvPool pool(cfg.env, kEnvs, 11);
  RolloutOptions opt;
  opt.horizon = kHorizon;
  for (auto _ : state) benchmark::DoNotOptimize(collect_rollouts_serial(ac, pool, opt));
  state.SetItemsProcessed(state.iterations() * kEnvs * kHorizon);
}
BENCHMARK(BM_RolloutSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RolloutParallel(benchmark::State& state) {
  const RunConfig& cfg = bench_config();
  const ActorCritic ac = bench_policy(cfg);
  EnvPool pool(cfg.env, kEnvs, 11);
  RolloutOptions opt;
  opt.horizon = kHorizon;
  opt.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collect_rollouts(ac, pool, opt));
  state.SetItemsProcessed(state.iterations() * kEnvs * kHorizon);
}
BENCHMARK(BM_RolloutParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnvStep(benchmark::State& state) {
  const RunConfig& cfg = bench_config();
  EnvConfig env_cfg = cfg.env;
  Rng rng = make_stream(3, kEnvStreamBase);
  LocomotionEnv env(env_cfg, rng);
  env.reset();
  const Vec12 zero = Vec12::Zero();
  for (auto _ : state) {
    if (env.done()) env.reset();
    benchmark::DoNotOptimize(env.step(zero));
  }
  state.SetLabel("one policy step (12-13 PD ticks)");
}
BENCHMARK(BM_EnvStep)->Unit(benchmark::kMicrosecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
