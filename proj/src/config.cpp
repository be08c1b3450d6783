#include "swarm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "swarm/csv.hpp"

namespace swarm {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid value for key '" + key + "': " + value);
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid value for key '" + key + "': " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid value for key '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ConfigError("invalid value for key '" + key + "': " + value);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

PathKind parse_path_kind(const std::string& value) {
  if (value == "west") return PathKind::West;
  if (value == "random") return PathKind::Random;
  if (value == "sharp") return PathKind::Sharp;
  if (value == "scurve") return PathKind::SCurve;
  if (value == "zigzag") return PathKind::Zigzag;
  throw ConfigError("invalid value for key 'path': " + value);
}

StrategyKind parse_strategy_kind(const std::string& value) {
  if (value == "td0") return StrategyKind::Td0;
  if (value == "td1") return StrategyKind::Td1;
  if (value == "td2") return StrategyKind::Td2;
  if (value == "td3") return StrategyKind::Td3;
  if (value == "pid") return StrategyKind::Pid;
  throw ConfigError("invalid value for key 'strategy': " + value);
}

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::West: return "west";
    case PathKind::Random: return "random";
    case PathKind::Sharp: return "sharp";
    case PathKind::SCurve: return "scurve";
    case PathKind::Zigzag: return "zigzag";
  }
  return "?";
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Td0: return "td0";
    case StrategyKind::Td1: return "td1";
    case StrategyKind::Td2: return "td2";
    case StrategyKind::Td3: return "td3";
    case StrategyKind::Pid: return "pid";
  }
  return "?";
}

ConfigMap parse_config_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw ConfigError("cannot open config file: " + file_path);
  ConfigMap map;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed config line " + std::to_string(line_no) + ": " + line);
    map.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  return map;
}

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.grid_paths = {PathKind::West, PathKind::Random, PathKind::Sharp, PathKind::SCurve,
                  PathKind::Zigzag};
  c.grid_strategies = {StrategyKind::Td0, StrategyKind::Td1, StrategyKind::Td2, StrategyKind::Td3,
                       StrategyKind::Pid};
  c.grid_sizes = {50, 100, 500};
  c.sim.strategy.gains = kDefaultPidGains;
  return c;
}

ExperimentConfig build_config(const ConfigMap& map) {
  ExperimentConfig c = default_config();
  std::optional<double> demand_scale;
  std::optional<double> i_max;

  for (const auto& [key, value] : map.entries) {
    if (key == "path") {
      c.sim.path.kind = parse_path_kind(value);
    } else if (key == "strategy") {
      c.sim.strategy.kind = parse_strategy_kind(value);
    } else if (key == "agents") {
      c.sim.params.n_agents = static_cast<int>(parse_long(key, value));
    } else if (key == "steps") {
      c.sim.params.timesteps = parse_long(key, value);
    } else if (key == "runs") {
      c.n_runs = static_cast<int>(parse_long(key, value));
    } else if (key == "seed") {
      c.base_seed = parse_u64(key, value);
    } else if (key == "out") {
      c.out_dir = value;
    } else if (key == "last_window") {
      c.last_window = parse_long(key, value);
    } else if (key == "target_step") {
      c.sim.params.target_step = parse_double(key, value);
      c.sim.path.step_length = c.sim.params.target_step;
    } else if (key == "demand_scale") {
      demand_scale = parse_double(key, value);
    } else if (key == "speed_ratio") {
      c.sim.params.speed_ratio = parse_double(key, value);
    } else if (key == "raw_stimulus") {
      c.sim.params.raw_stimulus = parse_bool(key, value);
    } else if (key == "epsilon") {
      c.sim.strategy.epsilon = parse_double(key, value);
    } else if (key == "psi") {
      c.sim.strategy.psi = parse_double(key, value);
    } else if (key == "idle_forgetting") {
      c.sim.strategy.idle_forgetting = parse_bool(key, value);
    } else if (key == "kp") {
      c.sim.strategy.gains.kp = parse_double(key, value);
    } else if (key == "ki") {
      c.sim.strategy.gains.ki = parse_double(key, value);
    } else if (key == "kd") {
      c.sim.strategy.gains.kd = parse_double(key, value);
    } else if (key == "i_max") {
      i_max = parse_double(key, value);
    } else if (key == "windup_mode") {
      if (value == "reset")
        c.sim.strategy.guard.freeze_on_zero_error = false;
      else if (value == "freeze")
        c.sim.strategy.guard.freeze_on_zero_error = true;
      else
        throw ConfigError("invalid value for key 'windup_mode': " + value);
    } else if (key == "random_sigma") {
      c.sim.path.sigma = parse_double(key, value);
    } else if (key == "sharp_turn_prob") {
      c.sim.path.turn_prob = parse_double(key, value);
    } else if (key == "scurve_period") {
      c.sim.path.period = parse_long(key, value);
    } else if (key == "scurve_amplitude_deg") {
      c.sim.path.amplitude = radians(parse_double(key, value));
    } else if (key == "zigzag_half_period") {
      c.sim.path.half_period = parse_long(key, value);
    } else if (key == "zigzag_up_deg") {
      c.sim.path.heading_up = radians(parse_double(key, value));
    } else if (key == "zigzag_down_deg") {
      c.sim.path.heading_down = radians(parse_double(key, value));
    } else if (key == "paths") {
      c.grid_paths.clear();
      for (const auto& item : split_list(value)) c.grid_paths.push_back(parse_path_kind(item));
    } else if (key == "strategies") {
      c.grid_strategies.clear();
      for (const auto& item : split_list(value))
        c.grid_strategies.push_back(parse_strategy_kind(item));
    } else if (key == "sizes") {
      c.grid_sizes.clear();
      for (const auto& item : split_list(value))
        c.grid_sizes.push_back(static_cast<int>(parse_long(key, item)));
    } else if (key == "kp_start") {
      c.sweep.kp_start = parse_double(key, value);
    } else if (key == "kp_step") {
      c.sweep.kp_step = parse_double(key, value);
    } else if (key == "kp_max") {
      c.sweep.kp_max = parse_double(key, value);
    } else if (key == "tune_window") {
      c.sweep.window = parse_long(key, value);
    } else if (key == "exec") {
      if (value == "serial")
        c.exec = Exec::Serial;
      else if (value == "parallel")
        c.exec = Exec::Parallel;
      else
        throw ConfigError("invalid value for key 'exec': " + value);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }

  // Derived defaults.
  c.sim.params.demand_scale = demand_scale.value_or(10.0 * c.sim.params.target_step);
  c.sim.strategy.guard.i_max = i_max.value_or(10.0 * c.sim.params.demand_scale);

  // Validation.
  if (c.sim.params.n_agents < 0) throw ConfigError("invalid value for key 'agents': must be >= 0");
  if (c.sim.params.timesteps < 1) throw ConfigError("invalid value for key 'steps': must be >= 1");
  if (c.n_runs < 1) throw ConfigError("invalid value for key 'runs': must be >= 1");
  if (!(c.sim.params.target_step > 0.0))
    throw ConfigError("invalid value for key 'target_step': must be > 0");
  if (!(c.sim.params.demand_scale > 0.0))
    throw ConfigError("invalid value for key 'demand_scale': must be > 0");
  if (!(c.sim.params.speed_ratio >= 0.0))
    throw ConfigError("invalid value for key 'speed_ratio': must be >= 0");
  if (!(c.sim.strategy.epsilon > 0.0))
    throw ConfigError("invalid value for key 'epsilon': must be > 0");
  if (!(c.sim.strategy.psi > 0.0)) throw ConfigError("invalid value for key 'psi': must be > 0");
  if (!(c.sim.strategy.guard.i_max > 0.0))
    throw ConfigError("invalid value for key 'i_max': must be > 0");
  if (!(c.sim.strategy.gains.kp >= 0.0) || !(c.sim.strategy.gains.ki >= 0.0) ||
      !(c.sim.strategy.gains.kd >= 0.0))
    throw ConfigError("invalid value for key 'kp'/'ki'/'kd': gains must be >= 0");
  if (!(c.sim.path.step_length > 0.0))
    throw ConfigError("invalid value for key 'target_step': must be > 0");
  if (c.sim.path.turn_prob < 0.0 || c.sim.path.turn_prob > 1.0)
    throw ConfigError("invalid value for key 'sharp_turn_prob': must be in [0, 1]");
  if (c.sim.path.period < 1) throw ConfigError("invalid value for key 'scurve_period': must be >= 1");
  if (c.sim.path.half_period < 1)
    throw ConfigError("invalid value for key 'zigzag_half_period': must be >= 1");
  if (c.last_window < 1) throw ConfigError("invalid value for key 'last_window': must be >= 1");
  if (c.grid_paths.empty()) throw ConfigError("invalid value for key 'paths': empty grid");
  if (c.grid_strategies.empty()) throw ConfigError("invalid value for key 'strategies': empty grid");
  if (c.grid_sizes.empty()) throw ConfigError("invalid value for key 'sizes': empty grid");
  for (int s : c.grid_sizes)
    if (s < 0) throw ConfigError("invalid value for key 'sizes': must be >= 0");
  return c;
}

std::string config_echo(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "# path=" << to_string(c.sim.path.kind) << " strategy=" << to_string(c.sim.strategy.kind)
     << " agents=" << c.sim.params.n_agents << " steps=" << c.sim.params.timesteps
     << " runs=" << c.n_runs << " seed=" << c.base_seed
     << " target_step=" << format_double(c.sim.params.target_step)
     << " demand_scale=" << format_double(c.sim.params.demand_scale)
     << " speed_ratio=" << format_double(c.sim.params.speed_ratio)
     << " raw_stimulus=" << (c.sim.params.raw_stimulus ? 1 : 0)
     << " epsilon=" << format_double(c.sim.strategy.epsilon)
     << " psi=" << format_double(c.sim.strategy.psi)
     << " idle_forgetting=" << (c.sim.strategy.idle_forgetting ? 1 : 0)
     << " kp=" << format_double(c.sim.strategy.gains.kp)
     << " ki=" << format_double(c.sim.strategy.gains.ki)
     << " kd=" << format_double(c.sim.strategy.gains.kd)
     << " i_max=" << format_double(c.sim.strategy.guard.i_max)
     << " windup_mode=" << (c.sim.strategy.guard.freeze_on_zero_error ? "freeze" : "reset")
     << " random_sigma=" << format_double(c.sim.path.sigma)
     << " sharp_turn_prob=" << format_double(c.sim.path.turn_prob)
     << " scurve_period=" << c.sim.path.period
     << " scurve_amplitude_deg=" << format_double(c.sim.path.amplitude * 180.0 / kPi)
     << " zigzag_half_period=" << c.sim.path.half_period
     << " zigzag_up_deg=" << format_double(c.sim.path.heading_up * 180.0 / kPi)
     << " zigzag_down_deg=" << format_double(c.sim.path.heading_down * 180.0 / kPi)
     << " last_window=" << c.last_window;
  return os.str();
}

}  // namespace swarm
