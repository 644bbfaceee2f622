#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "burniat/cases.hpp"
#include "burniat/fan_io.hpp"

using namespace burniat;

TEST_CASE("fan JSON round trip is byte-identical") {
  for (CaseId id : kAllCases) {
    Fan f = build_case_fan(id);
    std::string once = fan_to_json(f);
    Fan back = fan_from_json(once);
    CHECK(back == f);
    CHECK(fan_to_json(back) == once);
  }
}

TEST_CASE("fan JSON layout") {
  auto doc = nlohmann::json::parse(fan_to_json(build_case_fan(CaseId::Deg5)));
  CHECK(doc["rays"].size() == 18);
  CHECK(doc["max_cones"].size() == 32);
  CHECK(doc["ray_types"].size() == 18);
  CHECK(doc["lattice"]["ambient_rank"] == 4);
  CHECK(doc["lattice"]["basis"].size() == 3);
  CHECK(nlohmann::json::parse(fan_to_json(build_case_fan(CaseId::Deg3)))["rays"].size() == 2);
}

TEST_CASE("files") {
  auto path = (std::filesystem::temp_directory_path() / "burniat_test_fan.json").string();
  Fan f = build_case_fan(CaseId::Deg4a);
  write_fan_file(path, f);
  CHECK(read_fan_file(path) == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_fan_file(path), FanIoError);
  CHECK_THROWS_AS(write_fan_file("/nonexistent-dir/x.json", f), FanIoError);
}

TEST_CASE("malformed fan JSON") {
  CHECK_THROWS_AS(fan_from_json("["), FanIoError);
  CHECK_THROWS_AS(fan_from_json("{}"), FanIoError);
  CHECK_THROWS_AS(fan_from_json(R"({"lattice": {"ambient_rank": 2, "basis": [[1, 0], [0, 1]]},
                                    "rays": [[2, 0]], "max_cones": [[0]]})"),
                  FanError);
  // Overlapping cones are rejected after parsing.
  CHECK_THROWS_AS(fan_from_json(R"({"lattice": {"ambient_rank": 2, "basis": [[1, 0], [0, 1]]},
                                    "rays": [[1, 0], [0, 1], [1, 1], [-1, 0]], "max_cones": [[0, 1], [2, 3]]})"),
                  FanError);
}
