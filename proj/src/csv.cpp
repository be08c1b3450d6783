#include "swarm/csv.hpp"

#include <charconv>
#include <fstream>

namespace swarm {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + file.string());
  return out;
}

}  // namespace

void write_run_csv(const std::filesystem::path& file, const RunRecord& record,
                   const std::string& echo) {
  auto out = open_out(file);
  out << echo << "\n# run_seed=" << record.seed << "\n";
  out << "time,target_x,target_y,tracker_x,tracker_y,distance,"
         "spec_n,spec_e,spec_s,spec_w,act_n,act_e,act_s,act_w,act_idle\n";
  for (const RunRow& r : record.rows) {
    out << r.time << ',' << format_double(r.target.x) << ',' << format_double(r.target.y) << ','
        << format_double(r.tracker.x) << ',' << format_double(r.tracker.y) << ','
        << format_double(r.distance);
    for (int c : r.specialists) out << ',' << c;
    for (int c : r.action_counts) out << ',' << c;
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + file.string());
}

void write_summary_csv(const std::filesystem::path& file, std::span<const RunSummary> summaries,
                       const AggregateStats& aggregate, const std::string& echo) {
  auto out = open_out(file);
  out << echo << '\n';
  out << "run,seed,mean_distance,std_mean_distance,"
         "var_full_n,var_full_e,var_full_s,var_full_w,"
         "var_last_n,var_last_e,var_last_s,var_last_w,degenerate\n";
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const RunSummary& s = summaries[i];
    out << i << ',' << s.seed << ',' << format_double(s.mean_distance) << ',' << ',';
    for (Task t : kTasks) out << format_double(s.var_full[t]) << ',';
    for (Task t : kTasks) out << format_double(s.var_last[t]) << ',';
    out << '\n';
  }
  out << "aggregate,," << format_double(aggregate.mean) << ','
      << format_double(aggregate.stddev) << ",,,,,,,,," << (aggregate.degenerate ? 1 : 0) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

void write_compare_csv(const std::filesystem::path& file, std::span<const CompareRow> rows,
                       const std::string& echo) {
  auto out = open_out(file);
  out << echo << '\n';
  out << "path,strategy,n_agents,mean_of_means,std\n";
  for (const CompareRow& r : rows)
    out << r.path << ',' << r.strategy << ',' << r.n_agents << ','
        << format_double(r.mean_of_means) << ',' << format_double(r.stddev) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

void write_gains_csv(const std::filesystem::path& file, const UltimatePoint& ultimate,
                     const PidGains& gains, const std::string& echo) {
  auto out = open_out(file);
  out << echo << '\n';
  out << "ku,pu,kp,ki,kd\n";
  out << format_double(ultimate.ku) << ',' << format_double(ultimate.pu) << ','
      << format_double(gains.kp) << ',' << format_double(gains.ki) << ','
      << format_double(gains.kd) << '\n';
  if (!out) throw IoError("write failed: " + file.string());
}

void write_specialty_csv(const std::filesystem::path& file, const RunRecord& record,
                         const std::string& echo) {
  auto out = open_out(file);
  out << echo << "\n# run_seed=" << record.seed << '\n';
  out << "time";
  const std::size_t n_agents = record.specialty_matrix.empty() ? 0 : record.specialty_matrix[0].size();
  for (std::size_t a = 0; a < n_agents; ++a) out << ",agent_" << a;
  out << '\n';
  for (std::size_t i = 0; i < record.specialty_matrix.size(); ++i) {
    out << record.rows[i].time;
    for (std::uint8_t s : record.specialty_matrix[i])
      out << ',' << task_name(static_cast<Task>(s));
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + file.string());
}

void write_counts_csv(const std::filesystem::path& file, const RunRecord& record,
                      const std::string& echo) {
  auto out = open_out(file);
  out << echo << "\n# run_seed=" << record.seed << '\n';
  out << "time,count_n,count_e,count_s,count_w\n";
  for (const RunRow& r : record.rows) {
    out << r.time;
    for (int c : r.specialists) out << ',' << c;
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace swarm
