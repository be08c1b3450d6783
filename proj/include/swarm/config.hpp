#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swarm/parallel.hpp"
#include "swarm/sim.hpp"
#include "swarm/tuning.hpp"

namespace swarm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered key/value assignments; later entries override earlier ones, which is
// how command-line flags win over config-file values.
struct ConfigMap {
  std::vector<std::pair<std::string, std::string>> entries;
  void set(std::string key, std::string value) {
    entries.emplace_back(std::move(key), std::move(value));
  }
};

struct ExperimentConfig {
  SimConfig sim;
  int n_runs = 100;
  std::uint64_t base_seed = 1;
  std::string out_dir = "out";
  long last_window = 100;
  Exec exec = Exec::Parallel;

  // compare grid; defaults cover the full experiment table
  std::vector<PathKind> grid_paths;
  std::vector<StrategyKind> grid_strategies;
  std::vector<int> grid_sizes;

  SweepParams sweep;
};

// Flat `key = value` lines, '#' comments, blank lines ignored.
ConfigMap parse_config_file(const std::string& file_path);

// Applies entries over the defaults in order, then resolves derived defaults
// (demand_scale from target_step, i_max from demand_scale) and validates.
// Throws ConfigError naming the offending key.
ExperimentConfig build_config(const ConfigMap& map);

ExperimentConfig default_config();

PathKind parse_path_kind(const std::string& value);       // throws ConfigError
StrategyKind parse_strategy_kind(const std::string& value);  // throws ConfigError
std::string to_string(PathKind kind);
std::string to_string(StrategyKind kind);

// Deterministic one-line echo of the settings that shaped an output file.
std::string config_echo(const ExperimentConfig& config);

}  // namespace swarm
