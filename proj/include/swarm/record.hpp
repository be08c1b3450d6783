#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "swarm/task.hpp"
#include "swarm/vec2.hpp"

namespace swarm {

// One per-timestep log row, taken at the end of the step: positions after both
// moves, specialist counts after the threshold update, and the step's actions.
struct RunRow {
  long time = 0;
  Vec2 target;
  Vec2 tracker;
  double distance = 0.0;
  std::array<int, kTaskCount> specialists{};
  std::array<int, kActionCount> action_counts{};

  constexpr bool operator==(const RunRow&) const = default;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<RunRow> rows;
  // Per-timestep per-agent specialty (Task as int), filled only when a run is
  // asked to record it; rows x agents.
  std::vector<std::vector<std::uint8_t>> specialty_matrix;
};

// Per-run summary statistics: mean tracking distance plus specialist-count
// variances over the full run and over the trailing window.
struct RunSummary {
  std::uint64_t seed = 0;
  double mean_distance = 0.0;
  TaskVec<double> var_full;
  TaskVec<double> var_last;
  long last_window = 0;  // actual trailing window used (<= configured)

  constexpr bool operator==(const RunSummary&) const = default;
};

}  // namespace swarm
