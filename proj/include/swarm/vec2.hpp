#pragma once

#include <cmath>

namespace swarm {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  constexpr bool operator==(const Vec2&) const = default;
};

// sqrt is correctly rounded by IEEE-754, so this stays reproducible.
inline double length(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

inline double distance(const Vec2& a, const Vec2& b) { return length(a - b); }

}  // namespace swarm
