#pragma once

#include <array>
#include <span>
#include <vector>

#include "swarm/agent.hpp"
#include "swarm/parallel.hpp"
#include "swarm/record.hpp"
#include "swarm/task.hpp"

namespace swarm {

// The task with the lowest threshold; ties break in canonical N, E, S, W order.
Task specialty(const AgentState& agent);

// Specialist head-count per task; sums to the swarm size.
std::array<int, kTaskCount> specialist_counts(std::span<const AgentState> agents,
                                              Exec exec = Exec::Serial);

// Window selector for count_variance: the whole series or its trailing k entries.
struct CountWindow {
  long k = 0;  // 0 means the full series
  static CountWindow all() { return {0}; }
  static CountWindow last(long k) { return {k}; }
};

// Population variance of each task's specialist-count sequence restricted to
// the window. Throws std::invalid_argument when the window exceeds the series.
TaskVec<double> count_variance(std::span<const std::array<int, kTaskCount>> series,
                               CountWindow window);

// Arithmetic mean of the per-row Euclidean distances. Throws on empty records.
double mean_distance(const RunRecord& record);

struct AggregateStats {
  double mean = 0.0;
  double stddev = 0.0;      // sample (n-1) standard deviation
  bool degenerate = false;  // single-run sample: stddev reported as 0
};

// Cross-run aggregation of per-run mean distances. Throws on empty input.
AggregateStats aggregate_runs(std::span<const double> mean_distances);

// Build the per-run summary; the trailing window is clipped to the run length.
RunSummary summarize(const RunRecord& record, long last_window);

// Extract the specialist-count series from a record's rows.
std::vector<std::array<int, kTaskCount>> specialist_series(const RunRecord& record);

}  // namespace swarm
