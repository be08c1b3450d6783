#pragma once

#include "swarm/task.hpp"

namespace swarm {

// Inclusive clamp bounds for one threshold. Invariant: min <= max.
struct ThresholdRange {
  double min = 0.0;
  double max = 1.0;

  constexpr bool operator==(const ThresholdRange&) const = default;
};

// Per-agent thresholds plus controller state. The integral accumulator and
// prev_error slots are advanced only by the PID strategy and stay zero
// otherwise. prev_error holds stimulus-normalized values.
struct AgentState {
  TaskVec<double> thresholds;
  TaskVec<ThresholdRange> range;
  TaskVec<double> integral;
  TaskVec<double> prev_error;
};

}  // namespace swarm
