#pragma once

#include <cstdint>
#include <vector>

#include "swarm/parallel.hpp"
#include "swarm/record.hpp"
#include "swarm/sim.hpp"

namespace swarm {

struct BatchResult {
  std::vector<RunSummary> summaries;  // one per run, in run order
  std::vector<RunRecord> records;     // filled only when keep_records is set
};

// Executes n_runs seeded runs (seed = base_seed + run index). Runs are
// independent; under Exec::Parallel they execute concurrently with each run
// kept serial inside, and results land in run order either way.
BatchResult run_batch(const SimConfig& config, int n_runs, std::uint64_t base_seed,
                      long last_window, Exec exec, bool keep_records = false);

}  // namespace swarm
