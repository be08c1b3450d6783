// Command-line front end: run / compare / tune / specialize subcommands over
// the shared key=value configuration. Flags override config-file entries.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "swarm/commands.hpp"
#include "swarm/config.hpp"

namespace {

struct CliState {
  std::string config_file;
  swarm::ConfigMap flags;  // flag assignments, applied after the file
};

// Registers a flag that lands in the ConfigMap under `key`.
void add_kv_option(CLI::App* cmd, CliState& state, const std::string& flag,
                   const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&state, key](const std::string& value) { state.flags.set(key, value); }, help);
}

void add_common_options(CLI::App* cmd, CliState& state) {
  cmd->add_option("--config", state.config_file, "key = value configuration file");
  add_kv_option(cmd, state, "--path", "path", "target path: west|random|sharp|scurve|zigzag");
  add_kv_option(cmd, state, "--strategy", "strategy", "threshold strategy: td0|td1|td2|td3|pid");
  add_kv_option(cmd, state, "--agents", "agents", "swarm size");
  add_kv_option(cmd, state, "--steps", "steps", "timesteps per run");
  add_kv_option(cmd, state, "--runs", "runs", "number of seeded runs");
  add_kv_option(cmd, state, "--seed", "seed", "base seed; run r uses seed+r");
  add_kv_option(cmd, state, "--out", "out", "output directory");
  add_kv_option(cmd, state, "--last-window", "last_window", "trailing analysis window");
  add_kv_option(cmd, state, "--target-step", "target_step", "target step length");
  add_kv_option(cmd, state, "--demand-scale", "demand_scale",
                "world-unit demand mapped to full stimulus (default 10x target step)");
  add_kv_option(cmd, state, "--speed-ratio", "speed_ratio",
                "unanimous swarm speed relative to the target");
  add_kv_option(cmd, state, "--raw-stimulus", "raw_stimulus", "agents see raw demands (0|1)");
  add_kv_option(cmd, state, "--epsilon", "epsilon", "learning step (td1-td3)");
  add_kv_option(cmd, state, "--psi", "psi", "forgetting step (td1-td3)");
  add_kv_option(cmd, state, "--idle-forgetting", "idle_forgetting",
                "idle agents forget all tasks (0|1)");
  add_kv_option(cmd, state, "--kp", "kp", "proportional gain");
  add_kv_option(cmd, state, "--ki", "ki", "integral gain");
  add_kv_option(cmd, state, "--kd", "kd", "derivative gain");
  add_kv_option(cmd, state, "--i-max", "i_max",
                "integral saturation (default 10x demand scale)");
  add_kv_option(cmd, state, "--windup-mode", "windup_mode", "reset|freeze on zero error");
  add_kv_option(cmd, state, "--random-sigma", "random_sigma", "random path heading stddev, rad");
  add_kv_option(cmd, state, "--sharp-turn-prob", "sharp_turn_prob", "sharp path turn probability");
  add_kv_option(cmd, state, "--scurve-period", "scurve_period", "s-curve period, steps");
  add_kv_option(cmd, state, "--scurve-amplitude-deg", "scurve_amplitude_deg",
                "s-curve heading amplitude, degrees");
  add_kv_option(cmd, state, "--zigzag-half-period", "zigzag_half_period", "zigzag leg, steps");
  add_kv_option(cmd, state, "--zigzag-up-deg", "zigzag_up_deg", "zigzag first-leg heading, deg");
  add_kv_option(cmd, state, "--zigzag-down-deg", "zigzag_down_deg",
                "zigzag second-leg heading, deg");
  add_kv_option(cmd, state, "--exec", "exec", "serial|parallel batch execution");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Response-threshold swarm simulator for collective 2D tracking"};
  app.require_subcommand(1);

  CliState state;

  CLI::App* run = app.add_subcommand("run", "batch of seeded runs -> run_<idx>.csv, summary.csv");
  CLI::App* compare =
      app.add_subcommand("compare", "paths x strategies x sizes grid -> compare.csv");
  CLI::App* tune = app.add_subcommand("tune", "Ziegler-Nichols gain sweep -> gains.csv");
  CLI::App* specialize =
      app.add_subcommand("specialize", "single run -> specialty.csv, counts.csv");

  for (CLI::App* cmd : {run, compare, tune, specialize}) add_common_options(cmd, state);

  add_kv_option(compare, state, "--paths", "paths", "comma list of paths for the grid");
  add_kv_option(compare, state, "--strategies", "strategies", "comma list of strategies");
  add_kv_option(compare, state, "--sizes", "sizes", "comma list of swarm sizes");
  add_kv_option(tune, state, "--kp-start", "kp_start", "sweep start gain");
  add_kv_option(tune, state, "--kp-step", "kp_step", "sweep gain increment");
  add_kv_option(tune, state, "--kp-max", "kp_max", "sweep end gain");
  add_kv_option(tune, state, "--window", "tune_window", "oscillation detection window, steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : swarm::kExitConfigError;
  }

  swarm::ExperimentConfig config;
  try {
    swarm::ConfigMap map;
    if (!state.config_file.empty()) map = swarm::parse_config_file(state.config_file);
    for (auto& kv : state.flags.entries) map.entries.push_back(kv);
    config = swarm::build_config(map);
  } catch (const swarm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return swarm::kExitConfigError;
  }

  if (run->parsed()) return swarm::cmd_run(config);
  if (compare->parsed()) return swarm::cmd_compare(config);
  if (tune->parsed()) return swarm::cmd_tune(config);
  if (specialize->parsed()) return swarm::cmd_specialize(config);
  return swarm::kExitConfigError;
}
