#pragma once

#include <string>
#include <vector>

#include "ringmatch/matching.hpp"

namespace ringmatch {

/// A round-robin tournament plan: teams-1 rounds, each a perfect matching on
/// teams 0..teams-1 (stored as plain edge lists so that invalid schedules
/// can be represented and diagnosed).
struct Schedule {
  int teams = 0;
  std::vector<std::vector<Edge>> rounds;  // rounds[i] = round i+1, sorted
};

enum class ScheduleVariant { direct, reversed };

/// The single vertex a near-perfect matching leaves uncovered. Throws if the
/// number of uncovered vertices is not exactly one.
int unmatched_vertex(const Matching& m);

/// Builds the full (m.n()+1)-team round-robin schedule generated by a
/// rainbow near-perfect matching m of the odd circle: round i pairs the hub
/// team m.n() with the vertex the rotated matching leaves free, and the
/// rotations sweep every pair exactly once because no two edges of m share
/// a circular distance. The direct variant uses m itself; the reversed
/// variant runs the same sweep over the mirrored matching, with rounds
/// phased so the hub meets (n-1-i'+i) mod (n-1) in round i+1 (i' being m's
/// unmatched vertex). Throws if m is not a rainbow near-perfect matching.
Schedule schedule_from_rpm(const Matching& m, ScheduleVariant variant);

struct ScheduleViolation {
  enum class Kind {
    team_count,         // teams odd or < 2
    round_count,        // rounds.size() != teams-1
    bad_game,           // loop or out-of-range team in a game
    team_appearance,    // team plays != 1 game in a round
    pair_multiplicity,  // pair meets != 1 time across the schedule
  };
  Kind kind;
  int round = 0;  // 1-based; 0 for schedule-wide violations
  int a = -1;     // team, or smaller team of the pair
  int b = -1;     // larger team of the pair; -1 for per-team violations
  int count = 0;  // observed multiplicity where relevant

  std::string describe() const;
};

/// Checks the two round-robin constraints (every team exactly once per
/// round; every pair exactly once overall) plus basic shape. Returns the
/// empty vector iff the schedule is feasible; violations are data, in a
/// deterministic order.
std::vector<ScheduleViolation> validate_schedule(const Schedule& s);

}  // namespace ringmatch
