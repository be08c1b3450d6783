#include "swarm/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace swarm {

PidGains zn_gains(const UltimatePoint& u) {
  if (!(u.pu > 0.0)) throw std::invalid_argument("zn_gains: pu must be positive");
  return {0.6 * u.ku, 1.2 * u.ku / u.pu, 0.075 * u.ku * u.pu};
}

std::vector<Peak> find_peaks(std::span<const double> signal) {
  std::vector<Peak> peaks;
  const std::size_t n = signal.size();
  std::size_t i = 1;
  while (i < n) {
    if (signal[i] > signal[i - 1]) {
      std::size_t j = i;
      while (j + 1 < n && signal[j + 1] == signal[i]) ++j;
      if (j + 1 < n && signal[j + 1] < signal[i])
        peaks.push_back({0.5 * (static_cast<double>(i) + static_cast<double>(j)), signal[i]});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return peaks;
}

OscillationResult detect_oscillation(std::span<const double> signal, int min_peaks,
                                     double max_spread) {
  const auto peaks = find_peaks(signal);
  if (static_cast<int>(peaks.size()) < min_peaks || signal.empty()) return {};

  double mean = 0.0;
  for (double s : signal) mean += s;
  mean /= static_cast<double>(signal.size());

  // Scan windows of min_peaks consecutive peaks, latest first.
  for (int start = static_cast<int>(peaks.size()) - min_peaks; start >= 0; --start) {
    double lo = peaks[static_cast<std::size_t>(start)].value - mean;
    double hi = lo;
    double sum = 0.0;
    bool ok = true;
    for (int k = 0; k < min_peaks; ++k) {
      const double amp = peaks[static_cast<std::size_t>(start + k)].value - mean;
      if (!(amp > 0.0)) {
        ok = false;
        break;
      }
      lo = std::min(lo, amp);
      hi = std::max(hi, amp);
      sum += amp;
    }
    if (!ok) continue;
    const double spread = (hi - lo) / (sum / static_cast<double>(min_peaks));
    if (spread > max_spread) continue;
    const double period = (peaks[static_cast<std::size_t>(start + min_peaks - 1)].pos -
                           peaks[static_cast<std::size_t>(start)].pos) /
                          static_cast<double>(min_peaks - 1);
    if (period >= 2.0) return {true, period};
  }
  return {};
}

namespace {

// Signed east-west error from end-of-step positions; the only demand axis on
// the straight path.
std::vector<double> east_west_signal(const RunRecord& record, long window) {
  const long n = static_cast<long>(record.rows.size());
  const long begin = n - window;
  std::vector<double> signal;
  signal.reserve(static_cast<std::size_t>(window));
  for (long i = begin; i < n; ++i) {
    const RunRow& row = record.rows[static_cast<std::size_t>(i)];
    signal.push_back(row.target.x - row.tracker.x);
  }
  return signal;
}

std::optional<double> sustained_period(const SimConfig& config, double kp, std::uint64_t seed,
                                       long window) {
  SimConfig candidate = config;
  candidate.strategy.gains = {kp, 0.0, 0.0};
  const RunRecord record = run_simulation(candidate, seed, Exec::Serial);
  const auto result = detect_oscillation(east_west_signal(record, window));
  if (result.sustained) return result.period;
  return std::nullopt;
}

}  // namespace

UltimatePoint find_ultimate(const SimConfig& base, const SweepParams& sweep, std::uint64_t seed,
                            Exec exec) {
  if (!(sweep.kp_start > 0.0)) throw std::invalid_argument("find_ultimate: kp_start must be > 0");
  if (!(sweep.kp_step > 0.0)) throw std::invalid_argument("find_ultimate: kp_step must be > 0");
  if (sweep.window < 50) throw std::invalid_argument("find_ultimate: window must be >= 50");
  if (base.params.timesteps < sweep.window)
    throw std::invalid_argument("find_ultimate: run shorter than detection window");

  SimConfig config = base;
  config.path.kind = PathKind::West;  // tuning uses the basic straight path
  config.strategy.kind = StrategyKind::Pid;

  const long n_candidates =
      static_cast<long>(std::floor((sweep.kp_max - sweep.kp_start) / sweep.kp_step)) + 1;

  if (exec == Exec::Serial) {
    for (long c = 0; c < n_candidates; ++c) {
      const double kp = sweep.kp_start + static_cast<double>(c) * sweep.kp_step;
      if (auto period = sustained_period(config, kp, seed, sweep.window))
        return {kp, *period};
    }
  } else {
    // Candidates are independent; evaluate them in blocks and keep the
    // lowest qualifying kp, matching the serial scan.
    const long block = std::max(1, thread_budget());
    for (long b = 0; b < n_candidates; b += block) {
      const long end = std::min(b + block, n_candidates);
      std::vector<std::optional<double>> found(static_cast<std::size_t>(end - b));
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
      for (long c = b; c < end; ++c) {
        const double kp = sweep.kp_start + static_cast<double>(c) * sweep.kp_step;
        found[static_cast<std::size_t>(c - b)] = sustained_period(config, kp, seed, sweep.window);
      }
      for (long c = b; c < end; ++c) {
        if (auto period = found[static_cast<std::size_t>(c - b)])
          return {sweep.kp_start + static_cast<double>(c) * sweep.kp_step, *period};
      }
    }
  }
  throw NoOscillationFound("no sustained oscillation up to kp_max=" + std::to_string(sweep.kp_max));
}

}  // namespace swarm
