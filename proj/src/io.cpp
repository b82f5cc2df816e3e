#include "ringmatch/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace ringmatch {

void to_json(nlohmann::json& j, const Matching& m) {
  j = nlohmann::json{{"n", m.n()}, {"edges", m.edges()}};
}

void from_json(const nlohmann::json& j, Matching& m) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument(
        "matching JSON must be an object with \"n\" and \"edges\"");
  }
  const auto& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 0) {
    throw std::invalid_argument("\"n\" must be a nonnegative integer");
  }
  const auto& je = j.at("edges");
  if (!je.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (const auto& item : je) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw std::invalid_argument(
          "each edge must be a two-element integer array");
    }
    edges.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  m = Matching(jn.get<int>(), std::move(edges));
}

void to_json(nlohmann::json& j, const RpmFamily& fam) {
  j = nlohmann::json{
      {"n", fam.n}, {"count", fam.count()}, {"members", fam.members}};
}

void to_json(nlohmann::json& j, const EnumerationReport& report) {
  j = nlohmann::json{{"n", report.n},
                     {"rpm_count", report.rpm_count},
                     {"class_count", report.class_count},
                     {"representatives", report.representatives}};
}

void to_json(nlohmann::json& j, const Schedule& s) {
  j = nlohmann::json{{"teams", s.teams}, {"rounds", s.rounds}};
}

std::string schedule_to_csv(const Schedule& s) {
  std::ostringstream os;
  os << "round,team_a,team_b\n";
  for (size_t r = 0; r < s.rounds.size(); ++r) {
    for (const Edge& g : s.rounds[r]) {
      os << (r + 1) << ',' << g.first << ',' << g.second << '\n';
    }
  }
  return os.str();
}

Matching matching_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("input is not valid JSON");
  }
  return j.get<Matching>();
}

Matching load_matching(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return matching_from_json_text(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matching_from_json_text(buf.str());
}

}  // namespace ringmatch
