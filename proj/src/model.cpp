#include "swarm/model.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace swarm {

DirectionalError compute_error(const Vec2& target, const Vec2& tracker) {
  DirectionalError e;
  e[Task::North] = std::max(0.0, target.y - tracker.y);
  e[Task::South] = std::max(0.0, tracker.y - target.y);
  e[Task::East] = std::max(0.0, target.x - tracker.x);
  e[Task::West] = std::max(0.0, tracker.x - target.x);
  return e;
}

Stimulus normalize_stimulus(const DirectionalError& err, double demand_scale) {
  assert(demand_scale > 0.0);
  Stimulus s;
  for (Task t : kTasks) s[t] = std::min(1.0, err[t] / demand_scale);
  return s;
}

namespace {

// Eligibility as a 4-bit mask plus count packed in one byte; pure per-agent work.
inline std::uint8_t eligibility_mask(const AgentState& agent, const Stimulus& stim) {
  std::uint8_t mask = 0;
  for (Task t : kTasks)
    if (stim[t] > agent.thresholds[t]) mask |= static_cast<std::uint8_t>(1u << index(t));
  return mask;
}

inline Action decode_action(std::uint8_t mask, Rng& rng) {
  if (mask == 0) return Action::Idle;
  Task eligible[kTaskCount];
  int n = 0;
  for (Task t : kTasks)
    if (mask & (1u << index(t))) eligible[n++] = t;
  if (n == 1) return push_action(eligible[0]);
  return push_action(eligible[rng.next_below(static_cast<std::uint32_t>(n))]);
}

}  // namespace

Action select_action(const AgentState& agent, const Stimulus& stim, Rng& rng) {
  return decode_action(eligibility_mask(agent, stim), rng);
}

void select_actions(std::span<const AgentState> agents, const Stimulus& stim, Rng& rng,
                    std::vector<Action>& out, Exec exec) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(agents.size());
  out.resize(agents.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = select_action(agents[i], stim, rng);
    return;
  }
  static thread_local std::vector<std::uint8_t> masks;
  masks.resize(agents.size());
  std::uint8_t* const mask = masks.data();
  const AgentState* const agent = agents.data();
#pragma omp parallel for schedule(static) num_threads(thread_budget())
  for (std::ptrdiff_t i = 0; i < n; ++i) mask[i] = eligibility_mask(agent[i], stim);
  // rng draws stay serial and in agent order.
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = decode_action(mask[i], rng);
}

Vec2 aggregate_actions(std::span<const Action> actions, double push_strength) {
  long north = 0, east = 0, south = 0, west = 0;
  for (Action a : actions) {
    switch (a) {
      case Action::PushNorth: ++north; break;
      case Action::PushEast: ++east; break;
      case Action::PushSouth: ++south; break;
      case Action::PushWest: ++west; break;
      case Action::Idle: break;
    }
  }
  return {push_strength * static_cast<double>(east - west),
          push_strength * static_cast<double>(north - south)};
}

}  // namespace swarm
