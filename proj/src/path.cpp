#include "swarm/path.hpp"

#include <cmath>

namespace swarm {

PathGenerator::PathGenerator(const PathParams& params)
    : params_(params), heading_(params.kind == PathKind::West ? kPi : 0.0) {}

Vec2 PathGenerator::next_step(long t, Rng& rng) {
  switch (params_.kind) {
    case PathKind::West:
      // Exact axis step; avoids sin(pi) residue.
      return {-params_.step_length, 0.0};
    case PathKind::Random:
      heading_ += rng.next_gaussian(params_.sigma);
      break;
    case PathKind::Sharp:
      if (rng.next_double() < params_.turn_prob) heading_ = rng.next_double() * 2.0 * kPi;
      break;
    case PathKind::SCurve:
      heading_ = params_.amplitude *
                 std::sin(2.0 * kPi * static_cast<double>(t) / static_cast<double>(params_.period));
      break;
    case PathKind::Zigzag:
      heading_ = ((t / params_.half_period) % 2 == 0) ? params_.heading_up : params_.heading_down;
      break;
  }
  return {params_.step_length * std::cos(heading_), params_.step_length * std::sin(heading_)};
}

}  // namespace swarm
