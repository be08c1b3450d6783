#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarm/analysis.hpp"
#include "swarm/record.hpp"
#include "swarm/strategy.hpp"
#include "swarm/tuning.hpp"

namespace swarm {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

struct CompareRow {
  std::string path;
  std::string strategy;
  int n_agents = 0;
  double mean_of_means = 0.0;
  double stddev = 0.0;
};

// All writers: LF line endings, header row, '#'-prefixed echo lines first.
void write_run_csv(const std::filesystem::path& file, const RunRecord& record,
                   const std::string& echo);
void write_summary_csv(const std::filesystem::path& file, std::span<const RunSummary> summaries,
                       const AggregateStats& aggregate, const std::string& echo);
void write_compare_csv(const std::filesystem::path& file, std::span<const CompareRow> rows,
                       const std::string& echo);
void write_gains_csv(const std::filesystem::path& file, const UltimatePoint& ultimate,
                     const PidGains& gains, const std::string& echo);
void write_specialty_csv(const std::filesystem::path& file, const RunRecord& record,
                         const std::string& echo);
void write_counts_csv(const std::filesystem::path& file, const RunRecord& record,
                      const std::string& echo);

}  // namespace swarm
