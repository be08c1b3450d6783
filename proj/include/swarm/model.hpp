#pragma once

#include <span>
#include <vector>

#include "swarm/agent.hpp"
#include "swarm/parallel.hpp"
#include "swarm/rng.hpp"
#include "swarm/task.hpp"
#include "swarm/vec2.hpp"

namespace swarm {

struct SimParams {
  int n_agents = 100;
  long timesteps = 500;
  double target_step = 1.0;   // target displacement per timestep, world units
  double demand_scale = 10.0; // world-unit demand that maps to full stimulus
  double speed_ratio = 2.0;   // unanimous-swarm speed relative to the target
  bool raw_stimulus = false;  // sensitivity switch: agents see raw demands

  // Per-agent push, sized so a unanimous swarm moves speed_ratio times the
  // target speed regardless of swarm size.
  double push_strength() const {
    return n_agents > 0 ? speed_ratio * target_step / static_cast<double>(n_agents) : 0.0;
  }
};

// Directional error magnitudes from the target-tracker offset. At most one of
// {N, S} and one of {E, W} comes out nonzero.
DirectionalError compute_error(const Vec2& target, const Vec2& tracker);

// s_i = min(1, e_i / demand_scale). Precondition: demand_scale > 0 (enforced
// at configuration time).
Stimulus normalize_stimulus(const DirectionalError& err, double demand_scale);

// Threshold-activation rule: tasks whose stimulus strictly exceeds the agent's
// threshold are eligible. No eligible task -> Idle; one -> push it; several ->
// uniform random pick, consuming exactly one draw.
Action select_action(const AgentState& agent, const Stimulus& stim, Rng& rng);

// Action selection for a whole swarm in ascending agent index order. The
// parallel kernel precomputes eligibility and leaves the rng draws in a serial
// pass, so both policies consume the stream identically.
void select_actions(std::span<const AgentState> agents, const Stimulus& stim, Rng& rng,
                    std::vector<Action>& out, Exec exec);

// Net tracker displacement: (push * (#E - #W), push * (#N - #S)).
Vec2 aggregate_actions(std::span<const Action> actions, double push_strength);

}  // namespace swarm
