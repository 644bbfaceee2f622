#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "burniat/degenerations.hpp"

using namespace burniat;

namespace {

std::string read_tables_file() {
  std::ifstream in(BURNIAT_TABLES_PATH);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("base volumes") {
  std::vector<int> v;
  for (int f = 0; f <= 9; ++f) v.push_back(base_volume(f));
  CHECK(v == std::vector<int>{6, 2, 2, 3, 1, 2, 4, 5, 1, 3});
  CHECK_THROWS_AS(base_volume(10), UnknownFamily);
  CHECK_THROWS_AS(base_volume(-1), UnknownFamily);
}

TEST_CASE("labels") {
  CHECK(base_component(0).label() == "#0(6)");
  CHECK(raw_child(base_component(6), 2).label() == "#6_2(2)");
  CHECK(raw_child(base_component(8), 2).label() == "#8_2(-1)");
}

TEST_CASE("children and identifications") {
  CHECK(child(base_component(2), 1) == base_component(4));
  CHECK(raw_child(base_component(2), 1).label() == "#2_1(1)");
  ComponentType e1 = child(base_component(8), 1);
  CHECK(e1.volume == 0);
  CHECK(e1.marker == VolumeMarker::ContractToCurve);
  ComponentType e2 = child(base_component(8), 2);
  CHECK(e2.volume == -1);
  CHECK(marker_name(e2.marker) == "flip");
  CHECK(child(e1, 1) == e2);
  CHECK_THROWS_AS(child(base_component(8), 3), std::invalid_argument);
  CHECK_THROWS_AS(child(base_component(3), 0), std::invalid_argument);
  // Recorded but not applied: the second kind of #6_2(2) is not described.
  CHECK(child(base_component(6), 2).label() == "#6_2(2)");
}

TEST_CASE("child volumes drop by exactly the blowup count") {
  for (int f = 0; f <= 9; ++f) {
    ComponentType c = base_component(f);
    for (int k = 1; c.volume - k >= -1; ++k) {
      CHECK(raw_child(c, k).volume == c.volume - k);
      CHECK(child(c, k).volume == c.volume - k);
    }
  }
  for (const auto& id : identifications()) CHECK(id.from.volume == id.to.volume);
}

TEST_CASE("generic components") {
  CHECK(derive_generic_component(CaseId::Deg3).label() == "#0_3(3)");
  CHECK(derive_generic_component(CaseId::Deg4a).label() == "#0_2(4)");
  CHECK(derive_generic_component(CaseId::Deg4b).label() == "#0_2(4)");
  CHECK(derive_generic_component(CaseId::Deg5).label() == "#0_1(5)");
  for (CaseId id : kAllCases)
    CHECK(derive_generic_component(id).volume == 6 - static_cast<int>(case_spec(id).conditions.size()));
}

TEST_CASE("token parsing and normalisation") {
  CHECK(parse_component("#3_1(2)").component == raw_child(base_component(3), 1));
  CHECK(parse_component("#3_1(2)").notes.empty());
  ParsedComponent stray = parse_component("#4(1))");
  CHECK(stray.component == base_component(4));
  CHECK(stray.notes.size() == 1);
  ParsedComponent doubled = parse_component("#4(1)(1)");
  CHECK(doubled.component == base_component(4));
  CHECK(doubled.notes.size() == 1);
  ParsedComponent nohash = parse_component("0_2(4)");
  CHECK(nohash.component.label() == "#0_2(4)");
  CHECK(nohash.notes.size() == 1);
  ParsedComponent alias = parse_component("#9_2(2)");
  CHECK(alias.component.label() == "#9_1(2)");
  CHECK(alias.alias_of == std::optional<std::string>("#9_1(2)"));
  CHECK_THROWS(parse_component("#4(1)x"));
  CHECK_THROWS(parse_component("four"));
  CHECK_THROWS(parse_component("#12(1)"));
}

TEST_CASE("catalog membership") {
  for (const auto& c : catalog_children()) CHECK(in_catalog(c));
  CHECK(in_catalog(base_component(7)));
  CHECK(in_catalog(raw_child(base_component(2), 1)));
  CHECK_FALSE(in_catalog(raw_child(base_component(7), 1)));
  CHECK_FALSE(in_catalog(ComponentType{5, 0, 3, VolumeMarker::None}));
}

TEST_CASE("embedded tables match the data file and all rows pass") {
  CHECK(nlohmann::json::parse(embedded_tables_json()) == nlohmann::json::parse(read_tables_file()));
  TablesReport r = validate_tables();
  CHECK(r.errors.empty());
  CHECK(r.rows.size() == 11 + 3 + 4 + 6 + 9);
  for (const auto& row : r.rows) {
    INFO(row.table << " [" << row.row << "]");
    CHECK(row.pass);
    CHECK(row.volume_sum == row.degree);
  }
  CHECK(r.ok());
  std::map<std::string, int> degree;
  for (const auto& row : r.rows) degree[row.table] = row.degree;
  CHECK(degree == std::map<std::string, int>{{"deg6", 6}, {"deg3", 3}, {"deg4a", 4}, {"deg4b", 4}, {"deg5", 5}});
  std::size_t noted = 0;
  for (const auto& row : r.rows) noted += row.notes.size();
  CHECK(noted == 5);
}

TEST_CASE("specific table rows") {
  TablesReport r = validate_tables();
  auto find = [&](const std::string& t, const std::string& row) {
    for (const auto& x : r.rows)
      if (x.table == t && x.row == row) return x;
    FAIL("row not found");
    return TableRowResult{};
  };
  CHECK(find("deg6", "CCDDD").components == std::vector<std::string>(6, "#4(1)"));
  CHECK(find("deg3", "E").components == std::vector<std::string>{"#5(2)", "#6_3(1)"});
  CHECK(find("deg5", "CDD").volume_sum == 5);
}

TEST_CASE("corrupted tables fail on the corrupted row") {
  nlohmann::json doc = nlohmann::json::parse(embedded_tables_json());
  doc["tables"][4]["rows"][3]["components"][1] = "#6_1(4)";
  TablesReport r = validate_tables(doc.dump());
  CHECK_FALSE(r.ok());
  REQUIRE(r.failed() == 1);
  for (const auto& row : r.rows)
    if (!row.pass) {
      CHECK(row.table == "deg5");
      CHECK(row.row == "E");
    }
  nlohmann::json doc2 = nlohmann::json::parse(embedded_tables_json());
  doc2["tables"][1]["rows"][1]["components"].push_back("#4(1)");
  CHECK(validate_tables(doc2.dump()).failed() == 1);
  nlohmann::json doc3 = nlohmann::json::parse(embedded_tables_json());
  doc3["tables"][0]["rows"][0]["components"][0] = "#0_7(-1)";
  CHECK(validate_tables(doc3.dump()).failed() == 1);
}

TEST_CASE("malformed table files are reported, not thrown") {
  CHECK_FALSE(validate_tables("{not json").ok());
  CHECK_FALSE(validate_tables("{}").ok());
  CHECK_FALSE(validate_tables(R"({"tables": []})").ok());
  CHECK_FALSE(validate_tables(R"({"tables": [{"name": "x", "rows": []}]})").ok());
}
