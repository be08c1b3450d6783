#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace swarm {

// Canonical task order is N, E, S, W. Every loop, tie-break and CSV column
// that depends on ordering uses this order.
enum class Task : int { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Task, 4> kTasks{Task::North, Task::East, Task::South, Task::West};
inline constexpr std::size_t kTaskCount = 4;

constexpr std::size_t index(Task t) { return static_cast<std::size_t>(t); }

constexpr std::string_view task_name(Task t) {
  constexpr std::array<std::string_view, 4> names{"N", "E", "S", "W"};
  return names[index(t)];
}

enum class Action : int { PushNorth = 0, PushEast = 1, PushSouth = 2, PushWest = 3, Idle = 4 };

inline constexpr std::size_t kActionCount = 5;

constexpr Action push_action(Task t) { return static_cast<Action>(index(t)); }
constexpr bool is_push(Action a) { return a != Action::Idle; }

// Precondition: is_push(a).
constexpr Task pushed_task(Action a) { return static_cast<Task>(static_cast<int>(a)); }

// Fixed-size per-task container indexed by Task.
template <typename T>
struct TaskVec {
  std::array<T, kTaskCount> v{};

  constexpr T& operator[](Task t) { return v[index(t)]; }
  constexpr const T& operator[](Task t) const { return v[index(t)]; }
  constexpr bool operator==(const TaskVec&) const = default;
};

// Per-task error magnitudes in world units; >= 0 everywhere, and at most one of
// {N, S} and one of {E, W} is nonzero.
using DirectionalError = TaskVec<double>;

// Per-task demand normalized into [0, 1].
using Stimulus = TaskVec<double>;

}  // namespace swarm
