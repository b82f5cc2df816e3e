#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ringmatch/family.hpp"
#include "ringmatch/matching.hpp"
#include "ringmatch/oracle.hpp"
#include "ringmatch/scheduler.hpp"

namespace ringmatch {

// Matching wire format: {"n": <int>, "edges": [[u,v], ...]} with edges in
// canonical order. Reading normalizes unsorted pairs and rejects loops,
// out-of-range endpoints and shared vertices (via the Matching constructor).
void to_json(nlohmann::json& j, const Matching& m);
void from_json(const nlohmann::json& j, Matching& m);

// {"n": <int>, "count": <int>, "members": [<matching>, ...]}
void to_json(nlohmann::json& j, const RpmFamily& fam);

// {"n": ..., "rpm_count": ..., "class_count": ..., "representatives": [...]}
void to_json(nlohmann::json& j, const EnumerationReport& report);

// {"teams": <int>, "rounds": [[[a,b], ...], ...]}, rounds in order.
void to_json(nlohmann::json& j, const Schedule& s);

/// CSV with header "round,team_a,team_b"; one row per game, team_a < team_b,
/// rounds numbered from 1.
std::string schedule_to_csv(const Schedule& s);

/// Parses a matching from JSON text. Throws std::invalid_argument with the
/// first violated invariant on malformed input.
Matching matching_from_json_text(const std::string& text);

/// Reads a matching from a JSON file; "-" means stdin.
Matching load_matching(const std::string& path);

}  // namespace ringmatch
