#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace swarm {

// SplitMix64, used for seeding and deriving sub-streams.
struct SplitMix64 {
  std::uint64_t state;

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** (Blackman & Vigna). The whole artifact draws from this one
// generator family so runs replay bit-for-bit across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : state_) w = sm.next();
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; usable as a log() argument.
  double next_double_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Uniform integer in [0, n) for n >= 1, via 128-bit fixed-point multiply.
  std::uint32_t next_below(std::uint32_t n) {
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // N(0, sigma^2) by Box-Muller; consumes exactly two raw draws per call.
  double next_gaussian(double sigma) {
    const double u1 = next_double_pos();
    const double u2 = next_double();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kTau * u2);
  }

 private:
  static constexpr double kTau = 6.28318530717958647692;
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// Per-run streams derived from one run seed. The path stream feeds only the
// target trajectory, so every strategy sees the same trajectory for a given
// seed; the agent stream covers threshold initialization and action tie-breaks,
// consumed in ascending agent index order.
struct RunRngs {
  Rng path;
  Rng agents;

  explicit RunRngs(std::uint64_t seed)
      : path(SplitMix64{seed ^ 0xA3C59AC2ED9725ADULL}.next()),
        agents(SplitMix64{seed ^ 0x51F0E9C35A9F3D01ULL}.next()) {}
};

}  // namespace swarm
