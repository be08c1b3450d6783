#include "swarm/batch.hpp"

#include "swarm/analysis.hpp"

namespace swarm {

BatchResult run_batch(const SimConfig& config, int n_runs, std::uint64_t base_seed,
                      long last_window, Exec exec, bool keep_records) {
  BatchResult out;
  out.summaries.resize(static_cast<std::size_t>(n_runs));
  if (keep_records) out.records.resize(static_cast<std::size_t>(n_runs));

  const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget()) if (parallel)
  for (int r = 0; r < n_runs; ++r) {
    RunRecord record =
        run_simulation(config, base_seed + static_cast<std::uint64_t>(r), Exec::Serial);
    out.summaries[static_cast<std::size_t>(r)] = summarize(record, last_window);
    if (keep_records) out.records[static_cast<std::size_t>(r)] = std::move(record);
  }
  return out;
}

}  // namespace swarm
