#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "swarm/model.hpp"
#include "swarm/parallel.hpp"
#include "swarm/path.hpp"
#include "swarm/record.hpp"
#include "swarm/rng.hpp"
#include "swarm/strategy.hpp"

namespace swarm {

struct WorldState {
  long time = 0;
  Vec2 target;
  Vec2 tracker;
  std::vector<AgentState> agents;
  // Most recent decisions, consumed by the learning/forgetting update at the
  // start of the next step. Starts all Idle.
  std::vector<Action> prev_actions;
};

// Everything one run needs besides its seed.
struct SimConfig {
  SimParams params;
  PathParams path;
  StrategyConfig strategy;
};

struct StepOutcome {
  DirectionalError error;
  Stimulus stimulus;
  std::array<int, kActionCount> action_counts{};
};

// One simulation step, in this fixed order: (1) the target advances along the
// path; (2) directional error, then stimulus, are computed; (3) the strategy
// updates every agent's thresholds (PID consumes the stimulus-normalized
// error, TD1-TD3 consume the previous step's actions); (4) agents select
// actions in index order; (5) the aggregate action moves the tracker; (6) time
// advances. Deterministic given (seed, config).
StepOutcome step_world(WorldState& state, PathGenerator& path, const StrategyConfig& strategy,
                       const SimParams& params, RunRngs& rngs, Exec exec);

// Full seeded run producing the per-timestep record.
RunRecord run_simulation(const SimConfig& config, std::uint64_t seed, Exec exec,
                         bool record_specialties = false);

}  // namespace swarm
