#include <doctest.h>

#include <algorithm>
#include <vector>

#include "swarm/model.hpp"

using namespace swarm;

namespace {

AgentState agent_with(double n, double e, double s, double w) {
  AgentState a;
  a.thresholds[Task::North] = n;
  a.thresholds[Task::East] = e;
  a.thresholds[Task::South] = s;
  a.thresholds[Task::West] = w;
  return a;
}

Stimulus stim_of(double n, double e, double s, double w) {
  Stimulus st;
  st[Task::North] = n;
  st[Task::East] = e;
  st[Task::South] = s;
  st[Task::West] = w;
  return st;
}

}  // namespace

TEST_CASE("compute_error resolves the offset into directional magnitudes") {
  const DirectionalError e = compute_error({3.0, 4.0}, {1.0, 1.0});
  CHECK(e[Task::North] == 3.0);
  CHECK(e[Task::East] == 2.0);
  CHECK(e[Task::South] == 0.0);
  CHECK(e[Task::West] == 0.0);

  const DirectionalError zero = compute_error({0.0, 0.0}, {0.0, 0.0});
  for (Task t : kTasks) CHECK(zero[t] == 0.0);

  const DirectionalError f = compute_error({-2.0, 0.0}, {0.0, 5.0});
  CHECK(f[Task::North] == 0.0);
  CHECK(f[Task::East] == 0.0);
  CHECK(f[Task::South] == 5.0);
  CHECK(f[Task::West] == 2.0);
}

TEST_CASE("compute_error: mutual exclusion and swap symmetry on random pairs") {
  Rng rng(7001);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 a{200.0 * rng.next_double() - 100.0, 200.0 * rng.next_double() - 100.0};
    const Vec2 b{200.0 * rng.next_double() - 100.0, 200.0 * rng.next_double() - 100.0};
    const DirectionalError e = compute_error(a, b);
    REQUIRE(e[Task::North] * e[Task::South] == 0.0);
    REQUIRE(e[Task::East] * e[Task::West] == 0.0);
    for (Task t : kTasks) REQUIRE(e[t] >= 0.0);
    const DirectionalError r = compute_error(b, a);
    REQUIRE(e[Task::North] == r[Task::South]);
    REQUIRE(e[Task::South] == r[Task::North]);
    REQUIRE(e[Task::East] == r[Task::West]);
    REQUIRE(e[Task::West] == r[Task::East]);
  }
}

TEST_CASE("normalize_stimulus scales linearly and saturates at 1") {
  DirectionalError err;
  err[Task::North] = 5.0;
  Stimulus s = normalize_stimulus(err, 10.0);
  CHECK(s[Task::North] == 0.5);
  CHECK(s[Task::East] == 0.0);

  err[Task::North] = 50.0;
  s = normalize_stimulus(err, 10.0);
  CHECK(s[Task::North] == 1.0);

  s = normalize_stimulus(DirectionalError{}, 3.7);
  for (Task t : kTasks) CHECK(s[t] == 0.0);
}

TEST_CASE("select_action: single eligible task, no eligible task") {
  Rng rng(1);
  CHECK(select_action(agent_with(0.9, 0.9, 0.9, 0.1), stim_of(0, 0, 0, 0.5), rng) ==
        Action::PushWest);
  CHECK(select_action(agent_with(0.9, 0.9, 0.9, 0.9), stim_of(0.5, 0.5, 0.5, 0.5), rng) ==
        Action::Idle);
  // Equality is not enough: stimulus must strictly exceed the threshold.
  CHECK(select_action(agent_with(0.5, 0.9, 0.9, 0.9), stim_of(0.5, 0, 0, 0), rng) == Action::Idle);
}

TEST_CASE("select_action: two-way ties split evenly over seeded draws") {
  const AgentState a = agent_with(0.1, 0.1, 0.9, 0.9);
  const Stimulus st = stim_of(0.5, 0.5, 0.0, 0.0);
  Rng rng(424242);
  int north = 0, east = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const Action act = select_action(a, st, rng);
    if (act == Action::PushNorth) ++north;
    else if (act == Action::PushEast) ++east;
    else REQUIRE(false);
  }
  CHECK(north + east == n);
  CHECK(std::abs(north / double(n) - 0.5) < 0.02);
  CHECK(std::abs(east / double(n) - 0.5) < 0.02);
}

TEST_CASE("select_action never picks a task at or below its threshold") {
  Rng rng(99);
  Rng draws(100);
  for (int i = 0; i < 2000; ++i) {
    AgentState a;
    Stimulus st;
    for (Task t : kTasks) {
      a.thresholds[t] = rng.next_double();
      st[t] = rng.next_double();
    }
    const Action act = select_action(a, st, draws);
    if (is_push(act)) REQUIRE(st[pushed_task(act)] > a.thresholds[pushed_task(act)]);
  }
}

TEST_CASE("aggregate_actions nets out opposing pushes") {
  const std::vector<Action> a{Action::PushNorth, Action::PushNorth, Action::PushSouth};
  CHECK(aggregate_actions(a, 1.0) == Vec2{0.0, 1.0});

  const std::vector<Action> idle(10, Action::Idle);
  CHECK(aggregate_actions(idle, 2.0) == Vec2{0.0, 0.0});

  std::vector<Action> ew;
  for (int i = 0; i < 50; ++i) ew.push_back(Action::PushEast);
  for (int i = 0; i < 50; ++i) ew.push_back(Action::PushWest);
  CHECK(aggregate_actions(ew, 0.04) == Vec2{0.0, 0.0});
}

TEST_CASE("aggregate_actions is permutation-invariant") {
  Rng rng(31337);
  std::vector<Action> actions;
  for (int i = 0; i < 200; ++i)
    actions.push_back(static_cast<Action>(rng.next_below(kActionCount)));
  const Vec2 base = aggregate_actions(actions, 0.13);
  for (int trial = 0; trial < 20; ++trial) {
    // Fisher-Yates with the test rng.
    for (std::size_t i = actions.size() - 1; i > 0; --i)
      std::swap(actions[i], actions[rng.next_below(static_cast<std::uint32_t>(i + 1))]);
    CHECK(aggregate_actions(actions, 0.13) == base);
  }
}
