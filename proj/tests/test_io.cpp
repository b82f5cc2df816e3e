#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "ringmatch/constructions.hpp"
#include "ringmatch/family.hpp"
#include "ringmatch/io.hpp"
#include "ringmatch/oracle.hpp"
#include "ringmatch/scheduler.hpp"

using namespace ringmatch;

TEST_CASE("matching json round trip and exact shape") {
  Matching m = ars(9);
  nlohmann::json j = m;
  CHECK(j.dump() == R"({"edges":[[0,1],[2,5],[3,7],[4,6]],"n":9})");
  CHECK(j.get<Matching>() == m);

  CHECK(nlohmann::json(Matching(0)).dump() == R"({"edges":[],"n":0})");
}

TEST_CASE("matching json reader normalizes pair order") {
  Matching m = matching_from_json_text(
      R"({"n": 7, "edges": [[6, 0], [4, 2], [5, 1]]})");
  CHECK(m == Matching(7, {{0, 6}, {1, 5}, {2, 4}}));
}

TEST_CASE("matching json reader rejects malformed input") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(matching_from_json_text(text), std::invalid_argument);
  };
  bad("not json at all");
  bad(R"([1,2,3])");
  bad(R"({"n": 7})");
  bad(R"({"edges": []})");
  bad(R"({"n": -1, "edges": []})");
  bad(R"({"n": 2.5, "edges": []})");
  bad(R"({"n": 7, "edges": [[0]]})");
  bad(R"({"n": 7, "edges": [[0, 1, 2]]})");
  bad(R"({"n": 7, "edges": [[0, "x"]]})");
  bad(R"({"n": 7, "edges": [[0, 0]]})");          // loop
  bad(R"({"n": 7, "edges": [[0, 7]]})");          // out of range
  bad(R"({"n": 7, "edges": [[0, 1], [1, 2]]})");  // shared vertex
}

TEST_CASE("family json") {
  nlohmann::json j = family(9);
  CHECK(j["n"] == 9);
  CHECK(j["count"] == 2);
  REQUIRE(j["members"].size() == 2);
  CHECK(j["members"][0].get<Matching>() == family(9).members[0]);
}

TEST_CASE("report json") {
  nlohmann::json j = census(4);
  CHECK(j.dump() ==
        R"({"class_count":0,"n":4,"representatives":[],"rpm_count":0})");
}

TEST_CASE("schedule csv and json") {
  Schedule s = schedule_from_rpm(kirkman(3), ScheduleVariant::direct);
  CHECK(schedule_to_csv(s) ==
        "round,team_a,team_b\n"
        "1,0,2\n"
        "1,1,3\n"
        "2,0,1\n"
        "2,2,3\n"
        "3,0,3\n"
        "3,1,2\n");
  nlohmann::json j = s;
  CHECK(j["teams"] == 4);
  CHECK(j["rounds"].size() == 3);
  CHECK(j["rounds"][0].dump() == "[[0,2],[1,3]]");
}

TEST_CASE("load_matching") {
  CHECK_THROWS_AS(load_matching("/nonexistent/path.json"),
                  std::invalid_argument);
}
