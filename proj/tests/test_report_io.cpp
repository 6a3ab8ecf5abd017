#include <doctest.h>

#include "maxclass/biderivations.hpp"
#include "maxclass/commuting.hpp"
#include "maxclass/local.hpp"
#include "maxclass/report_io.hpp"

#include <json.hpp>

using namespace maxclass;

TEST_CASE("machine record for Der_0(m0)") {
  auto m0 = builtin_algebra("m0", 16);
  SolveReport r = derivation_space(m0, 0, 16);
  r.closed_form_match = true;
  const auto j = nlohmann::json::parse(write_report(r, ReportFormat::machine));
  CHECK(j["algebra"] == "m0");
  CHECK(j["kind"] == "derivation");
  CHECK(j["weight"] == 0);
  CHECK(j["horizon"] == 16);
  CHECK(j["window"] == nlohmann::json::array({1, 16}));
  CHECK(j["dimension"] == 2);
  CHECK(j["basis"].size() == 2);
  CHECK(j["closed_form_match"] == true);
  CHECK(j["stability"].is_null());
  const auto& entry = j["basis"][0][0];
  CHECK(entry["source"].is_array());
  CHECK(entry["target"].is_array());
  CHECK(entry["coeff"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("zero-dimensional report has an empty basis") {
  auto m0 = builtin_algebra("m0", 16);
  SolveReport r = derivation_space(m0, -3, 16);
  const auto j = nlohmann::json::parse(write_report(r, ReportFormat::machine));
  CHECK(j["dimension"] == 0);
  CHECK(j["basis"].empty());
}

TEST_CASE("biderivation entries carry two source indices") {
  auto m2 = builtin_algebra("m2", 16);
  SolveReport r = biderivation_space(m2, 0, 16);
  const auto j = nlohmann::json::parse(write_report(r, ReportFormat::machine));
  const auto& src = j["basis"][0][0]["source"];
  CHECK(src.size() == 2);
  CHECK(src[0].is_array());
}

TEST_CASE("property: parse(write(report)) round trips for every kind") {
  std::vector<SolveReport> reports;
  for (const std::string name : {"m0", "l1", "m2"}) {
    auto spec = builtin_algebra(name, 20);
    for (int k : {-2, 0, 1, 3}) {
      SolveReport d = derivation_space(spec, k, 20);
      reports.push_back(d);
      reports.push_back(biderivation_space(spec, k, 20));
      reports.push_back(commuting_space(spec, k, 20));
      TestFamily fam = default_family(spec, k, 20, 8);
      reports.push_back(local_overapprox(spec, k, 20, fam, d));
      reports.push_back(two_local_overapprox(spec, k, 20, fam, d));
    }
  }
  int flag = 0;
  for (auto& r : reports) {
    if (flag % 3 == 1) r.closed_form_match = true;
    if (flag % 3 == 2) r.stability = false;
    ++flag;
    const std::string text = write_report(r, ReportFormat::machine);
    SolveReport back = parse_report(text);
    CHECK(back == r);
    CHECK(write_report(back, ReportFormat::machine) == text);
  }
}

TEST_CASE("text format and parse errors") {
  auto m0 = builtin_algebra("m0", 12);
  std::string t = write_report(derivation_space(m0, 1, 12), ReportFormat::text);
  CHECK(t.find("derivation m0 k=1 N=12") == 0);
  CHECK(t.find("e1 -> e2") != std::string::npos);
  CHECK_THROWS_AS(parse_report("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report("{\"algebra\":\"m0\"}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report(R"({"algebra":"m0","kind":"bogus","weight":0,"horizon":8,"window":[1,8],"dimension":0,"basis":[],"closed_form_match":null,"stability":null})"),
                  std::invalid_argument);
}
