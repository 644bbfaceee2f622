#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "burniat/degenerations.hpp"
#include "burniat/report.hpp"

using namespace burniat;

TEST_CASE("full verification passes") {
  VerifyReport r = run_verify();
  CHECK(r.fail == 0);
  CHECK(r.pass > 100);
  CHECK(r.recorded > 0);
  CHECK(exit_code(r) == 0);
  CHECK(r.cases.size() == 4);
  for (const auto& cr : r.cases) {
    CHECK(cr.fan.has_value());
    for (const auto& ch : cr.checks) {
      INFO(ch.id);
      CHECK(ch.status != CheckStatus::Fail);
      CHECK((ch.status == CheckStatus::Recorded) == (ch.source == "recorded"));
    }
  }
}

TEST_CASE("report JSON is deterministic and follows the schema") {
  std::string a = render_json(run_verify());
  std::string b = render_json(run_verify());
  CHECK(a == b);
  auto doc = nlohmann::json::parse(a);
  CHECK(doc.contains("version"));
  CHECK(doc["cases"].size() == 4);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["cases"][3]["fan"]["max_cones"].size() == 32);
  CHECK(doc["cases"][0]["case"] == "3");
}

TEST_CASE("case filter and markdown") {
  VerifyOptions o;
  o.case_filter = CaseId::Deg4b;
  VerifyReport r = run_verify(o);
  REQUIRE(r.cases.size() == 1);
  std::string md = render_markdown(r);
  CHECK(md.find("| pass | 4b.rays.count | 8 rays |") != std::string::npos);
  CHECK(md.find("◇ recorded") != std::string::npos);
}

TEST_CASE("a corrupted table makes the run fail and names the row") {
  auto doc = nlohmann::json::parse(embedded_tables_json());
  doc["tables"][2]["rows"][3]["components"][0] = "#4(2)";
  VerifyOptions o;
  o.tables_json = doc.dump();
  o.case_filter = CaseId::Deg3;
  VerifyReport r = run_verify(o);
  CHECK(r.fail == 1);
  CHECK(exit_code(r) == 1);
  bool named = false;
  for (const auto& ch : r.global.checks)
    if (ch.status == CheckStatus::Fail) named = ch.id == "global.tables.deg4a[DD]";
  CHECK(named);
}
