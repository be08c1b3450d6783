#include <doctest.h>

#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/sim.hpp"

using namespace swarm;

namespace {

SimConfig west_config(StrategyKind kind, int agents, long steps) {
  SimConfig c;
  c.params.n_agents = agents;
  c.params.timesteps = steps;
  c.path.kind = PathKind::West;
  c.strategy.kind = kind;
  return c;
}

}  // namespace

TEST_CASE("step_world: empty swarm never moves the tracker") {
  SimConfig c = west_config(StrategyKind::Td0, 0, 1);
  WorldState state;
  RunRngs rngs(1);
  PathGenerator path(c.path);
  const StepOutcome out = step_world(state, path, c.strategy, c.params, rngs, Exec::Serial);
  CHECK(state.tracker == Vec2{0.0, 0.0});
  CHECK(state.target == Vec2{-1.0, 0.0});
  CHECK(out.error[Task::West] == 1.0);
  CHECK(out.error[Task::East] == 0.0);
  CHECK(state.time == 1);
}

TEST_CASE("step_world: hand-simulated single-agent TD0 chase") {
  // One always-eligible west specialist, demand_scale 1, push 1: the sub-step
  // order makes the tracker match the target from the first step on, so the
  // per-step delta is exactly -1 from step 2 onward.
  SimConfig c = west_config(StrategyKind::Td0, 1, 3);
  c.params.demand_scale = 1.0;
  c.params.speed_ratio = 1.0;  // push_strength = 1
  WorldState state;
  AgentState a;
  a.thresholds[Task::North] = 0.9;
  a.thresholds[Task::East] = 0.9;
  a.thresholds[Task::South] = 0.9;
  a.thresholds[Task::West] = 0.0;
  state.agents = {a};
  state.prev_actions = {Action::Idle};
  RunRngs rngs(7);
  PathGenerator path(c.path);

  std::vector<double> tracker_x;
  for (int step = 0; step < 3; ++step) {
    step_world(state, path, c.strategy, c.params, rngs, Exec::Serial);
    tracker_x.push_back(state.tracker.x);
  }
  CHECK(tracker_x[0] == -1.0);
  CHECK(tracker_x[1] == -2.0);
  CHECK(tracker_x[2] == -3.0);
  CHECK(tracker_x[1] - tracker_x[0] == -1.0);
  CHECK(tracker_x[2] - tracker_x[1] == -1.0);
}

TEST_CASE("run_simulation: identical seed and config replay bit-identically") {
  for (StrategyKind kind :
       {StrategyKind::Td0, StrategyKind::Td1, StrategyKind::Td2, StrategyKind::Td3,
        StrategyKind::Pid}) {
    SimConfig c = west_config(kind, 40, 80);
    c.path.kind = PathKind::Random;
    c.strategy.gains = {0.3, 0.05, 0.1};
    const RunRecord r1 = run_simulation(c, 99, Exec::Serial);
    const RunRecord r2 = run_simulation(c, 99, Exec::Serial);
    REQUIRE(r1.rows.size() == r2.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) REQUIRE(r1.rows[i] == r2.rows[i]);
  }
}

TEST_CASE("run_simulation: row count and partition invariants") {
  SimConfig c = west_config(StrategyKind::Td1, 17, 60);
  const RunRecord rec = run_simulation(c, 5, Exec::Serial);
  REQUIRE(rec.rows.size() == 60);
  long expected_time = 1;
  for (const RunRow& row : rec.rows) {
    REQUIRE(row.time == expected_time++);
    int spec_sum = 0;
    for (int s : row.specialists) spec_sum += s;
    REQUIRE(spec_sum == 17);
    int act_sum = 0;
    for (int a : row.action_counts) act_sum += a;
    REQUIRE(act_sum == 17);
  }
}

TEST_CASE("TD0 thresholds are bit-identical after 500 steps") {
  SimConfig c = west_config(StrategyKind::Td0, 25, 500);
  RunRngs rngs(31);
  WorldState state;
  state.agents = init_thresholds(c.strategy, c.params.n_agents, rngs.agents);
  state.prev_actions.assign(state.agents.size(), Action::Idle);
  const auto initial = state.agents;
  PathGenerator path(c.path);
  for (long step = 0; step < 500; ++step)
    step_world(state, path, c.strategy, c.params, rngs, Exec::Serial);
  for (std::size_t i = 0; i < state.agents.size(); ++i)
    REQUIRE(state.agents[i].thresholds == initial[i].thresholds);
}

TEST_CASE("TD1: first step applies no learning because nothing was performed yet") {
  SimConfig c = west_config(StrategyKind::Td1, 5, 1);
  RunRngs rngs(11);
  WorldState state;
  state.agents = init_thresholds(c.strategy, c.params.n_agents, rngs.agents);
  state.prev_actions.assign(state.agents.size(), Action::Idle);
  const auto initial = state.agents;
  PathGenerator path(c.path);
  step_world(state, path, c.strategy, c.params, rngs, Exec::Serial);
  for (std::size_t i = 0; i < state.agents.size(); ++i)
    REQUIRE(state.agents[i].thresholds == initial[i].thresholds);
}

TEST_CASE("zero push strength leaves the tracker pinned at the origin") {
  SimConfig c = west_config(StrategyKind::Td0, 10, 10);
  c.params.speed_ratio = 0.0;
  const RunRecord rec = run_simulation(c, 3, Exec::Serial);
  for (const RunRow& row : rec.rows) {
    REQUIRE(row.tracker == Vec2{0.0, 0.0});
    REQUIRE(row.distance == distance(row.target, {0.0, 0.0}));
  }
}

TEST_CASE("raw stimulus mode feeds unnormalized demands to the agents") {
  SimConfig c = west_config(StrategyKind::Td0, 1, 1);
  c.params.raw_stimulus = true;
  WorldState state;
  state.agents = {AgentState{}};
  state.prev_actions = {Action::Idle};
  RunRngs rngs(2);
  PathGenerator path(c.path);
  const StepOutcome out = step_world(state, path, c.strategy, c.params, rngs, Exec::Serial);
  CHECK(out.stimulus == out.error);
}

TEST_CASE("strategies on a shared seed face identical target trajectories") {
  SimConfig base = west_config(StrategyKind::Td0, 30, 120);
  base.path.kind = PathKind::Random;
  const RunRecord td0 = run_simulation(base, 404, Exec::Serial);
  for (StrategyKind kind : {StrategyKind::Td1, StrategyKind::Td2, StrategyKind::Td3,
                            StrategyKind::Pid}) {
    SimConfig other = base;
    other.strategy.kind = kind;
    other.strategy.gains = {0.2, 0.01, 0.05};
    const RunRecord rec = run_simulation(other, 404, Exec::Serial);
    REQUIRE(rec.rows.size() == td0.rows.size());
    for (std::size_t i = 0; i < rec.rows.size(); ++i)
      REQUIRE(rec.rows[i].target == td0.rows[i].target);
  }
}
