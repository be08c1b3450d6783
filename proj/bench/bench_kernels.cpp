// Serial vs OpenMP timing for the agent-loop kernels and the batch runner.
// Wall-clock only; results depend on SWARM_THREADS / OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/batch.hpp"
#include "swarm/sim.hpp"

using namespace swarm;

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& body, int reps) {
  const double t0 = now_ms();
  for (int i = 0; i < reps; ++i) body();
  return (now_ms() - t0) / reps;
}

void bench_strategy_kernel(int n_agents, int reps) {
  StrategyConfig cfg;
  cfg.kind = StrategyKind::Pid;
  cfg.gains = {0.3, 0.05, 0.1};
  Rng rng(1);
  auto agents = init_thresholds(cfg, n_agents, rng);
  DirectionalError err;
  err[Task::West] = 0.4;
  err[Task::North] = 0.1;
  const std::vector<Action> actions(agents.size(), Action::Idle);

  auto work = [&](Exec exec) {
    return time_ms([&] { apply_strategy(agents, actions, err, cfg, exec); }, reps);
  };
  const double serial = work(Exec::Serial);
  const double parallel = work(Exec::Parallel);
  std::printf("pid update      %8d agents   serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
              n_agents, serial, parallel, serial / parallel);
}

void bench_counts_kernel(int n_agents, int reps) {
  Rng rng(2);
  StrategyConfig cfg;
  auto agents = init_thresholds(cfg, n_agents, rng);
  volatile int sink = 0;
  auto work = [&](Exec exec) {
    return time_ms([&] { sink = sink + specialist_counts(agents, exec)[0]; }, reps);
  };
  const double serial = work(Exec::Serial);
  const double parallel = work(Exec::Parallel);
  std::printf("specialist count%8d agents   serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
              n_agents, serial, parallel, serial / parallel);
}

void bench_batch(int n_runs) {
  SimConfig c;
  c.params.n_agents = 200;
  c.params.timesteps = 500;
  c.path.kind = PathKind::Random;
  c.strategy.kind = StrategyKind::Pid;
  c.strategy.gains = {0.3, 0.05, 0.1};
  auto work = [&](Exec exec) {
    return time_ms([&] { run_batch(c, n_runs, 7, 100, exec); }, 1);
  };
  const double serial = work(Exec::Serial);
  const double parallel = work(Exec::Parallel);
  std::printf("batch %3d runs x 500 steps x 200   serial %8.1f ms   omp %8.1f ms   speedup %.2fx\n",
              n_runs, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", thread_budget());
  bench_strategy_kernel(10'000, 200);
  bench_strategy_kernel(100'000, 40);
  bench_counts_kernel(10'000, 200);
  bench_counts_kernel(100'000, 40);
  bench_batch(16);
  bench_batch(64);
  return 0;
}
