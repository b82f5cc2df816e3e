#include "ringmatch/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringmatch {

int unmatched_vertex(const Matching& m) {
  std::vector<int> free = m.uncovered();
  if (free.size() != 1) {
    throw std::invalid_argument(
        "expected exactly one uncovered vertex, found " +
        std::to_string(free.size()));
  }
  return free.front();
}

Schedule schedule_from_rpm(const Matching& m, ScheduleVariant variant) {
  const int n1 = m.n();
  if (n1 % 2 == 0) {
    throw std::invalid_argument(
        "scheduling needs a near-perfect matching on an odd vertex count, "
        "got " +
        std::to_string(n1));
  }
  if (auto why = rpm_failure(m)) {
    throw std::invalid_argument("scheduling needs a rainbow matching: " +
                                *why);
  }
  const int teams = n1 + 1;
  const int hub = n1;
  const int pivot = unmatched_vertex(m);
  const Matching base = variant == ScheduleVariant::direct ? m : reverse(m);

  Schedule s;
  s.teams = teams;
  s.rounds.reserve(static_cast<size_t>(teams - 1));
  for (int i = 0; i < teams - 1; ++i) {
    // The reversed sweep is phased one rotation ahead; either way the hub's
    // opponent is exactly the vertex the rotated matching leaves free.
    Matching round_m = variant == ScheduleVariant::direct
                           ? rotate(base, i)
                           : rotate(base, i + 1);
    int partner = variant == ScheduleVariant::direct
                      ? (pivot + i) % n1
                      : (n1 - pivot + i) % n1;
    std::vector<Edge> games = round_m.edges();
    games.push_back(make_edge(partner, hub));
    std::sort(games.begin(), games.end());
    s.rounds.push_back(std::move(games));
  }
  return s;
}

std::string ScheduleViolation::describe() const {
  switch (kind) {
    case Kind::team_count:
      return "team count " + std::to_string(a) + " is not an even number >= 2";
    case Kind::round_count:
      return "schedule has " + std::to_string(count) + " rounds, expected " +
             std::to_string(a);
    case Kind::bad_game:
      return "round " + std::to_string(round) + ": game {" +
             std::to_string(a) + "," + std::to_string(b) + "} is invalid";
    case Kind::team_appearance:
      return "round " + std::to_string(round) + ": team " + std::to_string(a) +
             " plays " + std::to_string(count) + " games";
    case Kind::pair_multiplicity:
      return "pair {" + std::to_string(a) + "," + std::to_string(b) +
             "} is matched " + std::to_string(count) + " times";
  }
  return "unknown violation";
}

std::vector<ScheduleViolation> validate_schedule(const Schedule& s) {
  using Kind = ScheduleViolation::Kind;
  std::vector<ScheduleViolation> out;
  const int t = s.teams;
  if (t < 2 || t % 2 != 0) {
    out.push_back({Kind::team_count, 0, t, -1, 0});
    return out;  // the remaining constraints are not meaningful
  }
  if (static_cast<int>(s.rounds.size()) != t - 1) {
    out.push_back(
        {Kind::round_count, 0, t - 1, -1, static_cast<int>(s.rounds.size())});
  }

  // pair multiplicities, indexed by (a,b) with a < b
  std::vector<int> pair_count(static_cast<size_t>(t) * t, 0);
  std::vector<int> per_team(static_cast<size_t>(t), 0);
  for (size_t r = 0; r < s.rounds.size(); ++r) {
    std::fill(per_team.begin(), per_team.end(), 0);
    for (const Edge& g : s.rounds[r]) {
      if (g.first == g.second || g.first < 0 || g.second < 0 ||
          g.first >= t || g.second >= t) {
        out.push_back({Kind::bad_game, static_cast<int>(r) + 1, g.first,
                       g.second, 0});
        continue;
      }
      int a = std::min(g.first, g.second);
      int b = std::max(g.first, g.second);
      ++pair_count[static_cast<size_t>(a) * t + b];
      ++per_team[static_cast<size_t>(a)];
      ++per_team[static_cast<size_t>(b)];
    }
    for (int v = 0; v < t; ++v) {
      if (per_team[static_cast<size_t>(v)] != 1) {
        out.push_back({Kind::team_appearance, static_cast<int>(r) + 1, v, -1,
                       per_team[static_cast<size_t>(v)]});
      }
    }
  }
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) {
      int c = pair_count[static_cast<size_t>(a) * t + b];
      if (c != 1) out.push_back({Kind::pair_multiplicity, 0, a, b, c});
    }
  }
  return out;
}

}  // namespace ringmatch
