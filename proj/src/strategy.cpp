#include "swarm/strategy.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>

namespace swarm {

bool uses_learning_forgetting(StrategyKind k) {
  return k == StrategyKind::Td1 || k == StrategyKind::Td2 || k == StrategyKind::Td3;
}

std::vector<AgentState> init_thresholds(const StrategyConfig& config, int n_agents, Rng& rng) {
  std::vector<AgentState> agents(n_agents > 0 ? static_cast<std::size_t>(n_agents) : 0u);
  for (AgentState& a : agents) {
    for (Task t : kTasks) {
      switch (config.kind) {
        case StrategyKind::Td0:
        case StrategyKind::Td1:
        case StrategyKind::Pid:
          a.range[t] = {0.0, 1.0};
          a.thresholds[t] = rng.next_double();
          break;
        case StrategyKind::Td2: {
          const double lo = 0.5 * rng.next_double();
          const double hi = 0.5 + 0.5 * rng.next_double();
          a.range[t] = {lo, hi};
          a.thresholds[t] = lo + rng.next_double() * (hi - lo);
          break;
        }
        case StrategyKind::Td3: {
          double lo = rng.next_double();
          double hi = rng.next_double();
          if (lo > hi) std::swap(lo, hi);
          a.range[t] = {lo, hi};
          a.thresholds[t] = lo + rng.next_double() * (hi - lo);
          break;
        }
      }
    }
  }
  return agents;
}

void update_learning_forgetting(AgentState& agent, Action performed, double epsilon, double psi,
                                bool idle_forgetting) {
  if (is_push(performed)) {
    const Task k = pushed_task(performed);
    for (Task t : kTasks) agent.thresholds[t] += (t == k) ? -epsilon : psi;
  } else if (idle_forgetting) {
    for (Task t : kTasks) agent.thresholds[t] += psi;
  } else {
    return;  // idle: no change
  }
  for (Task t : kTasks)
    agent.thresholds[t] = std::clamp(agent.thresholds[t], agent.range[t].min, agent.range[t].max);
}

PidFactors pid_factors(const DirectionalError& err, const DirectionalError& prev_err) {
  PidFactors f;
  f.proportional[Task::North] = err[Task::North] - err[Task::South];
  f.proportional[Task::East] = err[Task::East] - err[Task::West];
  f.proportional[Task::South] = err[Task::South] - err[Task::North];
  f.proportional[Task::West] = err[Task::West] - err[Task::East];
  for (Task t : kTasks) f.derivative[t] = err[t] - prev_err[t];
  return f;
}

TaskVec<double> integral_update(const TaskVec<double>& integral, const TaskVec<double>& fp,
                                const DirectionalError& err, const WindupGuard& guard) {
  TaskVec<double> out;
  for (Task t : kTasks) {
    if (guard.gate_on_positive_error && !(err[t] > 0.0)) {
      out[t] = guard.freeze_on_zero_error ? integral[t] : 0.0;
    } else {
      out[t] = std::clamp(integral[t] + fp[t], -guard.i_max, guard.i_max);
    }
  }
  return out;
}

void update_pid(AgentState& agent, const DirectionalError& err, const PidGains& gains,
                const WindupGuard& guard) {
  const PidFactors f = pid_factors(err, agent.prev_error);
  agent.integral = integral_update(agent.integral, f.proportional, err, guard);
  for (Task t : kTasks) {
    agent.thresholds[t] -=
        gains.kp * f.proportional[t] + gains.ki * agent.integral[t] + gains.kd * f.derivative[t];
    agent.thresholds[t] = std::clamp(agent.thresholds[t], 0.0, 1.0);
  }
  agent.prev_error = err;
}

void apply_strategy(std::span<AgentState> agents, std::span<const Action> performed,
                    const DirectionalError& err, const StrategyConfig& config, Exec exec) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(agents.size());
  switch (config.kind) {
    case StrategyKind::Td0:
      return;
    case StrategyKind::Td1:
    case StrategyKind::Td2:
    case StrategyKind::Td3: {
      assert(performed.size() == agents.size());
      if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
          update_learning_forgetting(agents[i], performed[i], config.epsilon, config.psi,
                                     config.idle_forgetting);
      } else {
#pragma omp parallel for schedule(static) num_threads(thread_budget())
        for (std::ptrdiff_t i = 0; i < n; ++i)
          update_learning_forgetting(agents[i], performed[i], config.epsilon, config.psi,
                                     config.idle_forgetting);
      }
      return;
    }
    case StrategyKind::Pid: {
      if (exec == Exec::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
          update_pid(agents[i], err, config.gains, config.guard);
      } else {
#pragma omp parallel for schedule(static) num_threads(thread_budget())
        for (std::ptrdiff_t i = 0; i < n; ++i)
          update_pid(agents[i], err, config.gains, config.guard);
      }
      return;
    }
  }
}

}  // namespace swarm
