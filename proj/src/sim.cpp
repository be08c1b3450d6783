#include "swarm/sim.hpp"

#include <utility>

#include "swarm/analysis.hpp"

namespace swarm {

StepOutcome step_world(WorldState& state, PathGenerator& path, const StrategyConfig& strategy,
                       const SimParams& params, RunRngs& rngs, Exec exec) {
  StepOutcome out;

  state.target += path.next_step(state.time, rngs.path);
  out.error = compute_error(state.target, state.tracker);
  out.stimulus =
      params.raw_stimulus ? out.error : normalize_stimulus(out.error, params.demand_scale);

  // Thresholds move before the decision; the controller sees the normalized error.
  apply_strategy(state.agents, state.prev_actions, out.stimulus, strategy, exec);

  static thread_local std::vector<Action> actions;
  select_actions(state.agents, out.stimulus, rngs.agents, actions, exec);
  for (Action a : actions) ++out.action_counts[static_cast<std::size_t>(a)];

  state.tracker += aggregate_actions(actions, params.push_strength());
  state.time += 1;
  state.prev_actions.assign(actions.begin(), actions.end());
  return out;
}

RunRecord run_simulation(const SimConfig& config, std::uint64_t seed, Exec exec,
                         bool record_specialties) {
  RunRngs rngs(seed);
  PathGenerator path(config.path);

  WorldState state;
  state.agents = init_thresholds(config.strategy, config.params.n_agents, rngs.agents);
  state.prev_actions.assign(state.agents.size(), Action::Idle);

  RunRecord record;
  record.seed = seed;
  record.rows.reserve(static_cast<std::size_t>(config.params.timesteps));

  for (long step = 0; step < config.params.timesteps; ++step) {
    const StepOutcome outcome = step_world(state, path, config.strategy, config.params, rngs, exec);

    RunRow row;
    row.time = state.time;
    row.target = state.target;
    row.tracker = state.tracker;
    row.distance = distance(state.target, state.tracker);
    row.specialists = specialist_counts(state.agents, exec);
    row.action_counts = outcome.action_counts;
    record.rows.push_back(row);

    if (record_specialties) {
      std::vector<std::uint8_t> specs;
      specs.reserve(state.agents.size());
      for (const AgentState& a : state.agents)
        specs.push_back(static_cast<std::uint8_t>(index(specialty(a))));
      record.specialty_matrix.push_back(std::move(specs));
    }
  }
  return record;
}

}  // namespace swarm
