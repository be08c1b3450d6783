#pragma once

#include "swarm/config.hpp"

namespace swarm {

// Exit codes shared by the library entry points and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeError = 2;
inline constexpr int kExitTuningError = 3;

// Batch of seeded runs: run_<idx>.csv per run plus summary.csv.
int cmd_run(const ExperimentConfig& config);

// Full grid paths x strategies x sizes into compare.csv; every cell reuses the
// same per-run seed sequence, so strategies face identical target trajectories.
int cmd_compare(const ExperimentConfig& config);

// Ziegler-Nichols sweep into gains.csv.
int cmd_tune(const ExperimentConfig& config);

// Single run emitting the per-agent specialty matrix (specialty.csv) and the
// per-task specialist-count series (counts.csv).
int cmd_specialize(const ExperimentConfig& config);

}  // namespace swarm
