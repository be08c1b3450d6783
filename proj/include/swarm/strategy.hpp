#pragma once

#include <span>
#include <vector>

#include "swarm/agent.hpp"
#include "swarm/parallel.hpp"
#include "swarm/rng.hpp"
#include "swarm/task.hpp"

namespace swarm {

enum class StrategyKind { Td0, Td1, Td2, Td3, Pid };

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
};

// Default gains: Ziegler-Nichols result of `swarmsim tune` on the default
// straight-path configuration (ku = 0.05, pu = 2); override via config.
inline constexpr PidGains kDefaultPidGains{0.03, 0.03, 0.0075};

// Anti-windup policy for the integral accumulator. The accumulator saturates
// at +/- i_max and only accumulates while the task's current error is
// positive; on zero error it resets, or holds when freeze_on_zero_error is
// set. gate_on_positive_error exists so tests can measure the raw running sum.
struct WindupGuard {
  double i_max = 100.0;
  bool gate_on_positive_error = true;
  bool freeze_on_zero_error = false;
};

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Td0;

  // Learning/forgetting step sizes (TD1-TD3).
  double epsilon = 0.1;
  double psi = 0.1;
  // When set, an idle agent raises all four thresholds by psi; default keeps
  // idle agents unchanged.
  bool idle_forgetting = false;

  // PID controller parameters.
  PidGains gains;
  WindupGuard guard;
};

bool uses_learning_forgetting(StrategyKind k);

// Draw initial thresholds and ranges; agent-major, task-minor draw order.
//   Td0/Td1/Pid: range [0,1], threshold ~ U[0,1].
//   Td2: per task, min ~ U[0,0.5], max ~ U[0.5,1], threshold ~ U[min,max].
//   Td3: per task, two draws from U[0,1] sorted into [min,max], threshold ~ U[min,max].
// PID controller state starts at zero.
std::vector<AgentState> init_thresholds(const StrategyConfig& config, int n_agents, Rng& rng);

// Learning/forgetting step: performing task k lowers its threshold by epsilon
// and raises every other threshold by psi; all four are then clamped into the
// agent's per-task range. Idle leaves thresholds unchanged unless
// idle_forgetting raises all four by psi.
void update_learning_forgetting(AgentState& agent, Action performed, double epsilon, double psi,
                                bool idle_forgetting);

struct PidFactors {
  TaskVec<double> proportional;  // e_N - e_S, e_E - e_W and their negations
  TaskVec<double> derivative;    // e_i - e_i(prev)
};

PidFactors pid_factors(const DirectionalError& err, const DirectionalError& prev_err);

// One accumulator step under the windup guard; see WindupGuard.
TaskVec<double> integral_update(const TaskVec<double>& integral, const TaskVec<double>& fp,
                                const DirectionalError& err, const WindupGuard& guard);

// Threshold update T <- T - kp*F_P - ki*F_I - kd*F_D per task, clamped to
// [0, 1]; stores err as the new prev_error. err is stimulus-normalized.
void update_pid(AgentState& agent, const DirectionalError& err, const PidGains& gains,
                const WindupGuard& guard);

// Strategy dispatch over the swarm. Td0 is the identity; Td1-Td3 use each
// agent's own previous action; Pid is error-driven and ignores actions.
// Serial and Parallel produce bit-identical agent states.
void apply_strategy(std::span<AgentState> agents, std::span<const Action> performed,
                    const DirectionalError& err, const StrategyConfig& config, Exec exec);

}  // namespace swarm
