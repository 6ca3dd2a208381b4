#include "doctest.h"
#include "json.hpp"
#include "qclass/suites.hpp"

using namespace qclass;

namespace {

SuiteConfig config(const std::string& suite, const std::string& body) {
  SuiteConfig c = parse_config(body);
  c.suite = suite;
  return c;
}

const char* kSo8 = R"({"class": {"N": 8, "gl_blocks": [], "m": 2, "p": 2}})";

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("config parsing") {
    const auto c = parse_config(R"({"class": {"N": 9, "gl_blocks": [1], "m": 2, "p": 1}, "mode": "generic", "jobs": 3,
                                    "caps": {"word_length": 40, "window": 5000}})");
    CHECK(c.cls.N == 9);
    CHECK(c.cls.ell() == 1);
    CHECK(c.mode == ParamMode::Generic);
    CHECK(c.jobs == 3);
    CHECK(c.word_length_cap == 40);
    CHECK(c.window_cap == 5000);
    CHECK(parse_config(R"({"N": 7, "gl_blocks": [], "m": 2, "p": 1})").cls.N == 7);
  }

  TEST_CASE("bad configs are rejected") {
    for (const char* body : {
             "not json",
             "[1, 2]",
             R"({"class": {"N": 11, "gl_blocks": [], "m": 2, "p": 3}})",
             R"({"class": {"N": 8, "gl_blocks": [], "m": 2, "p": 3}})",
             R"({"class": {"N": 8, "gl_blocks": [], "m": 2}})",
             R"({"class": {"N": 8, "gl_blocks": [], "m": 2, "p": 2}, "mode": "fast"})",
             R"({"class": {"N": 8, "gl_blocks": [], "m": 2, "p": 2}, "jobs": 0})",
             R"({"class": {"N": 8, "gl_blocks": [], "m": 2, "p": 2}, "caps": {"window": -1}})",
         }) {
      CAPTURE(body);
      CHECK_THROWS_AS(parse_config(body), ConfigError);
    }
  }

  TEST_CASE("report schema") {
    const Report r = run_suite(config("spectra", kSo8));
    CHECK(r.passed());
    const auto j = nlohmann::json::parse(report_json(r, true));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["suite"] == "spectra");
    CHECK(j["class"]["N"] == 8);
    CHECK(j["mode"] == "specialized");
    CHECK(j["status"] == "pass");
    REQUIRE(j["checks"].size() == r.checks.size());
    for (const auto& c : j["checks"]) {
      CHECK(c.contains("id"));
      CHECK(c.contains("anchor"));
      CHECK(c.contains("witness"));
      CHECK(c.contains("wall_time_ms"));
      CHECK(c["id"].get<std::string>().rfind("spectra.", 0) == 0);
    }
    const auto k = nlohmann::json::parse(report_json(r, false));
    CHECK_FALSE(k["checks"][0].contains("wall_time_ms"));
  }

  TEST_CASE("reports do not depend on the worker count") {
    SuiteConfig one = config("all", kSo8), four = one;
    four.jobs = 4;
    CHECK(report_json(run_suite(one), false) == report_json(run_suite(four), false));
  }

  TEST_CASE("every suite passes on the test classes") {
    for (const char* body : {R"({"class": {"N": 5, "gl_blocks": [], "m": 2, "p": 0}})",
                             R"({"class": {"N": 9, "gl_blocks": [1], "m": 2, "p": 1}})"})
      for (const char* mode : {"generic", "specialized"}) {
        SuiteConfig c = config("all", body);
        c.mode = parse_mode(mode);
        c.jobs = 2;
        const Report r = run_suite(c);
        for (const auto& rec : r.checks) {
          CAPTURE(rec.outcome.id);
          CAPTURE(rec.outcome.witness);
          CHECK(rec.outcome.status != Status::Fail);
        }
      }
  }
}
