#include "k3ball/checks.hpp"

#include <doctest.h>

using namespace k3ball;

TEST_CASE("check selection") {
  CHECK(select_checks("all").size() == check_registry().size());
  CHECK(select_checks("census") == std::vector<std::string>{"census"});
  auto disc = select_checks("disc");
  CHECK(disc.size() == 5);
  CHECK(select_checks("disc.anti.*").size() == 3);
  CHECK(select_checks("*.s0") == std::vector<std::string>{"config.s0"});
  CHECK_THROWS_AS(select_checks("nope"), std::invalid_argument);
  CHECK_THROWS_AS(select_checks("dis"), std::invalid_argument);
}

TEST_CASE("registry ids are unique and anchors non-empty") {
  std::set<std::string> ids;
  for (const auto& c : check_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("report JSON round trip") {
  auto reports = run_suite("config", kDefaultSeed);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    nlohmann::json j = r;
    CHECK(j.at("millis").is_null());
    CHECK(j.get<CheckReport>() == r);
  }
  CheckReport timed = run_check(check_registry().front(), 1, true);
  CHECK(timed.millis.has_value());
  nlohmann::json j = timed;
  CHECK(j.get<CheckReport>() == timed);
  CHECK_THROWS_AS(parse_status("maybe"), std::invalid_argument);
  CHECK_THROWS(nlohmann::json::parse(R"({"check":"x"})").get<CheckReport>());
}

TEST_CASE("suite output is independent of the job count") {
  auto a = run_suite("disc", kDefaultSeed, 1);
  auto b = run_suite("disc", kDefaultSeed, 3);
  CHECK(reports_to_json(a).dump() == reports_to_json(b).dump());
  CHECK(all_passed(a));
  CHECK(reports_to_text(a).find("5/5 checks passed") != std::string::npos);
}

TEST_CASE("a throwing check becomes a failure with the message as witness") {
  CheckDef bad{"bad", "throws", [](std::uint64_t) -> CheckOutcome { throw std::runtime_error("boom"); }};
  CheckReport r = run_check(bad, 0);
  CHECK(r.status == CheckStatus::Fail);
  CHECK(r.witness.at("error") == "boom");
  CHECK_FALSE(all_passed({r}));
}

TEST_CASE("unit vector sampling is seeded") {
  auto a = sample_unit_vectors(7, 5), b = sample_unit_vectors(7, 5), c = sample_unit_vectors(8, 5);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 5);
}
