#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/batch.hpp"
#include "swarm/sim.hpp"

using namespace swarm;

namespace {

SimConfig small_config(StrategyKind kind, PathKind path) {
  SimConfig c;
  c.params.n_agents = 64;
  c.params.timesteps = 60;
  c.path.kind = path;
  c.strategy.kind = kind;
  c.strategy.gains = {0.4, 0.08, 0.2};
  return c;
}

struct ThreadCapGuard {
  explicit ThreadCapGuard(const char* n) { setenv("SWARM_THREADS", n, 1); }
  ~ThreadCapGuard() { unsetenv("SWARM_THREADS"); }
};

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
  ThreadCapGuard cap("4");  // force real OpenMP teams even on one core
  for (StrategyKind kind :
       {StrategyKind::Td0, StrategyKind::Td1, StrategyKind::Td2, StrategyKind::Td3,
        StrategyKind::Pid}) {
    for (PathKind path : {PathKind::West, PathKind::Random, PathKind::Zigzag}) {
      const SimConfig c = small_config(kind, path);
      const RunRecord serial = run_simulation(c, 1234, Exec::Serial, true);
      const RunRecord parallel = run_simulation(c, 1234, Exec::Parallel, true);
      REQUIRE(serial.rows.size() == parallel.rows.size());
      for (std::size_t i = 0; i < serial.rows.size(); ++i)
        REQUIRE(serial.rows[i] == parallel.rows[i]);
      REQUIRE(serial.specialty_matrix == parallel.specialty_matrix);
    }
  }
}

TEST_CASE("batch runner: serial and parallel agree, run order preserved") {
  ThreadCapGuard cap("4");
  const SimConfig c = small_config(StrategyKind::Pid, PathKind::Random);
  const BatchResult serial = run_batch(c, 12, 500, 100, Exec::Serial, true);
  const BatchResult parallel = run_batch(c, 12, 500, 100, Exec::Parallel, true);
  REQUIRE(serial.summaries.size() == parallel.summaries.size());
  for (std::size_t r = 0; r < serial.summaries.size(); ++r) {
    REQUIRE(serial.summaries[r] == parallel.summaries[r]);
    REQUIRE(serial.summaries[r].seed == 500 + r);
    REQUIRE(serial.records[r].rows == parallel.records[r].rows);
  }
}

TEST_CASE("specialist_counts: OpenMP reduction matches the serial loop") {
  Rng rng(888);
  std::vector<AgentState> swarm;
  for (int i = 0; i < 5000; ++i) {
    AgentState a;
    for (Task t : kTasks) a.thresholds[t] = rng.next_double();
    swarm.push_back(a);
  }
  ThreadCapGuard cap("4");
  CHECK(specialist_counts(swarm, Exec::Serial) == specialist_counts(swarm, Exec::Parallel));
}

TEST_CASE("SWARM_THREADS caps the thread budget") {
  {
    ThreadCapGuard cap("3");
    CHECK(thread_budget() == 3);
  }
  CHECK(thread_budget() >= 1);
}
