#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarm/parallel.hpp"
#include "swarm/sim.hpp"
#include "swarm/strategy.hpp"

namespace swarm {

// Ultimate gain and oscillation period from the closed-loop P-only sweep.
struct UltimatePoint {
  double ku = 0.0;  // > 0
  double pu = 0.0;  // timesteps, >= 2
};

// Closed-loop Ziegler-Nichols gains: kp = 0.6 ku, ki = 1.2 ku / pu,
// kd = 0.075 ku pu. Throws std::invalid_argument on pu <= 0.
PidGains zn_gains(const UltimatePoint& u);

struct SweepParams {
  double kp_start = 0.05;
  double kp_step = 0.05;
  double kp_max = 5.0;
  long window = 200;  // trailing steps examined for sustained oscillation
};

struct NoOscillationFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Peak {
  double pos = 0.0;  // sample index; plateau center for flat-topped peaks
  double value = 0.0;
};

// Interior local maxima (strict rise into the peak, strict fall after it);
// flat tops report their center index.
std::vector<Peak> find_peaks(std::span<const double> signal);

struct OscillationResult {
  bool sustained = false;
  double period = 0.0;  // mean peak-to-peak spacing of the qualifying window
};

// Sustained oscillation: at least min_peaks consecutive peaks whose amplitudes
// above the signal mean agree within max_spread relative spread. The latest
// qualifying window wins; periods below 2 samples never qualify.
OscillationResult detect_oscillation(std::span<const double> signal, int min_peaks = 4,
                                     double max_spread = 0.2);

// P-only gain sweep on the straight-west path: runs the simulation at each
// candidate kp (fixed seed), inspects the signed east-west error over the
// trailing window, and returns the first kp with sustained oscillation along
// with the measured period. Throws NoOscillationFound when the sweep tops out.
UltimatePoint find_ultimate(const SimConfig& base, const SweepParams& sweep, std::uint64_t seed,
                            Exec exec);

}  // namespace swarm
