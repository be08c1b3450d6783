#include "swarm/analysis.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace swarm {

Task specialty(const AgentState& agent) {
  Task best = Task::North;
  for (Task t : kTasks)
    if (agent.thresholds[t] < agent.thresholds[best]) best = t;
  return best;
}

std::array<int, kTaskCount> specialist_counts(std::span<const AgentState> agents, Exec exec) {
  std::array<int, kTaskCount> counts{};
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(agents.size());
  if (exec == Exec::Serial) {
    for (const AgentState& a : agents) ++counts[index(specialty(a))];
    return counts;
  }
  int c0 = 0, c1 = 0, c2 = 0, c3 = 0;
#pragma omp parallel for schedule(static) num_threads(thread_budget()) \
    reduction(+ : c0, c1, c2, c3)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    switch (specialty(agents[i])) {
      case Task::North: ++c0; break;
      case Task::East: ++c1; break;
      case Task::South: ++c2; break;
      case Task::West: ++c3; break;
    }
  }
  return {c0, c1, c2, c3};
}

TaskVec<double> count_variance(std::span<const std::array<int, kTaskCount>> series,
                               CountWindow window) {
  const long n = static_cast<long>(series.size());
  const long k = window.k == 0 ? n : window.k;
  if (k > n) throw std::invalid_argument("count_variance: window longer than series");
  if (k <= 0) throw std::invalid_argument("count_variance: empty window");
  const std::size_t begin = static_cast<std::size_t>(n - k);

  TaskVec<double> var;
  for (Task t : kTasks) {
    const std::size_t ti = index(t);
    double mean = 0.0;
    for (std::size_t i = begin; i < series.size(); ++i) mean += series[i][ti];
    mean /= static_cast<double>(k);
    double ss = 0.0;
    for (std::size_t i = begin; i < series.size(); ++i) {
      const double d = static_cast<double>(series[i][ti]) - mean;
      ss += d * d;
    }
    var[t] = ss / static_cast<double>(k);  // population variance
  }
  return var;
}

double mean_distance(const RunRecord& record) {
  if (record.rows.empty()) throw std::invalid_argument("mean_distance: empty record");
  double sum = 0.0;
  for (const RunRow& row : record.rows) sum += row.distance;
  return sum / static_cast<double>(record.rows.size());
}

AggregateStats aggregate_runs(std::span<const double> mean_distances) {
  if (mean_distances.empty()) throw std::invalid_argument("aggregate_runs: no runs");
  const double n = static_cast<double>(mean_distances.size());
  double mean = 0.0;
  for (double d : mean_distances) mean += d;
  mean /= n;
  if (mean_distances.size() == 1) return {mean, 0.0, true};
  double ss = 0.0;
  for (double d : mean_distances) ss += (d - mean) * (d - mean);
  return {mean, std::sqrt(ss / (n - 1.0)), false};
}

std::vector<std::array<int, kTaskCount>> specialist_series(const RunRecord& record) {
  std::vector<std::array<int, kTaskCount>> series;
  series.reserve(record.rows.size());
  for (const RunRow& row : record.rows) series.push_back(row.specialists);
  return series;
}

RunSummary summarize(const RunRecord& record, long last_window) {
  RunSummary s;
  s.seed = record.seed;
  s.mean_distance = mean_distance(record);
  const auto series = specialist_series(record);
  const long n = static_cast<long>(series.size());
  s.last_window = last_window < n ? last_window : n;
  s.var_full = count_variance(series, CountWindow::all());
  s.var_last = count_variance(series, CountWindow::last(s.last_window));
  return s;
}

}  // namespace swarm
