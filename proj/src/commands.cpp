#include "swarm/commands.hpp"

#include <filesystem>
#include <iostream>
#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/batch.hpp"
#include "swarm/csv.hpp"

namespace swarm {

namespace fs = std::filesystem;

namespace {

fs::path prepare_out_dir(const ExperimentConfig& config) {
  fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  return dir;
}

std::vector<double> collect_means(const std::vector<RunSummary>& summaries) {
  std::vector<double> means;
  means.reserve(summaries.size());
  for (const RunSummary& s : summaries) means.push_back(s.mean_distance);
  return means;
}

}  // namespace

int cmd_run(const ExperimentConfig& config) {
  try {
    const fs::path dir = prepare_out_dir(config);
    const BatchResult batch = run_batch(config.sim, config.n_runs, config.base_seed,
                                        config.last_window, config.exec, /*keep_records=*/true);
    const std::string echo = config_echo(config);
    for (std::size_t r = 0; r < batch.records.size(); ++r)
      write_run_csv(dir / ("run_" + std::to_string(r) + ".csv"), batch.records[r], echo);
    const auto means = collect_means(batch.summaries);
    write_summary_csv(dir / "summary.csv", batch.summaries, aggregate_runs(means), echo);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "run: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

int cmd_compare(const ExperimentConfig& config) {
  try {
    const fs::path dir = prepare_out_dir(config);
    std::vector<CompareRow> rows;
    rows.reserve(config.grid_paths.size() * config.grid_strategies.size() *
                 config.grid_sizes.size());
    for (PathKind path : config.grid_paths) {
      for (StrategyKind strategy : config.grid_strategies) {
        for (int size : config.grid_sizes) {
          SimConfig cell = config.sim;
          cell.path.kind = path;
          cell.strategy.kind = strategy;
          cell.params.n_agents = size;
          const BatchResult batch =
              run_batch(cell, config.n_runs, config.base_seed, config.last_window, config.exec);
          const AggregateStats stats = aggregate_runs(collect_means(batch.summaries));
          rows.push_back({to_string(path), to_string(strategy), size, stats.mean, stats.stddev});
        }
      }
    }
    write_compare_csv(dir / "compare.csv", rows, config_echo(config));
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "compare: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

int cmd_tune(const ExperimentConfig& config) {
  try {
    const fs::path dir = prepare_out_dir(config);
    const UltimatePoint ultimate =
        find_ultimate(config.sim, config.sweep, config.base_seed, config.exec);
    write_gains_csv(dir / "gains.csv", ultimate, zn_gains(ultimate), config_echo(config));
    return kExitOk;
  } catch (const NoOscillationFound& e) {
    std::cerr << "tune: " << e.what() << '\n';
    return kExitTuningError;
  } catch (const std::exception& e) {
    std::cerr << "tune: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

int cmd_specialize(const ExperimentConfig& config) {
  try {
    const fs::path dir = prepare_out_dir(config);
    const RunRecord record =
        run_simulation(config.sim, config.base_seed, config.exec, /*record_specialties=*/true);
    const std::string echo = config_echo(config);
    write_specialty_csv(dir / "specialty.csv", record, echo);
    write_counts_csv(dir / "counts.csv", record, echo);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "specialize: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace swarm
