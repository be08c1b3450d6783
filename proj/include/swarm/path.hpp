#pragma once

#include "swarm/rng.hpp"
#include "swarm/vec2.hpp"

namespace swarm {

enum class PathKind { West, Random, Sharp, SCurve, Zigzag };

inline constexpr double kPi = 3.14159265358979323846;

constexpr double radians(double degrees) { return degrees * kPi / 180.0; }

struct PathParams {
  PathKind kind = PathKind::West;
  double step_length = 1.0;  // world units per timestep; every step has this magnitude

  double sigma = 1.0;       // random: heading increment stddev, radians
  double turn_prob = 0.02;  // sharp: per-step probability of a random turn

  long period = 100;                  // scurve: timesteps per full oscillation
  double amplitude = radians(60.0);   // scurve: peak heading, radians

  long half_period = 50;                   // zigzag: steps per leg
  double heading_up = radians(45.0);       // zigzag: first leg heading
  double heading_down = radians(-45.0);    // zigzag: second leg heading
};

// Target trajectory generator. The west path heads west; all other paths start
// heading east (zigzag starts on its up leg). Random and Sharp mutate the
// heading via the path rng stream; the rest are pure functions of t.
class PathGenerator {
 public:
  explicit PathGenerator(const PathParams& params);

  // Displacement for the step taken at timestep t (0-based).
  Vec2 next_step(long t, Rng& rng);

  const PathParams& params() const { return params_; }

 private:
  PathParams params_;
  double heading_;
};

}  // namespace swarm
