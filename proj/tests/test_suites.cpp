#include <json.hpp>

#include "helpers.hpp"
#include "lambdabuild/suites.hpp"

using namespace lambdabuild;

TEST_SUITE("suites") {
  TEST_CASE("every suite runs and passes on a small sample") {
    for (const auto& name : suite_names()) {
      SuiteOptions o;
      o.seed = 3;
      o.samples = name == "a2" ? 20 : 6;
      const SuiteReport r = run_suite(name, o);
      CHECK_MESSAGE(r.passed, format_report_text(r));
      CHECK(r.samples > 0);
      CHECK_FALSE(r.laws.empty());
    }
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  }

  TEST_CASE("identical seeds give byte-identical reports") {
    SuiteOptions o;
    o.seed = 17;
    o.samples = 10;
    for (const char* name : {"pseudometric", "a2", "fixed-set", "lambda-tree"}) {
      CHECK(format_report_json(run_suite(name, o)) == format_report_json(run_suite(name, o)));
      CHECK(format_report_text(run_suite(name, o)) == format_report_text(run_suite(name, o)));
    }
  }

  TEST_CASE("samples are seeded independently of the run window") {
    SuiteOptions whole;
    whole.seed = 5;
    whole.samples = 8;
    SuiteOptions tail = whole;
    tail.first = 4;
    tail.samples = 4;
    const auto a = run_suite("stabilizer", whole), b = run_suite("stabilizer", tail);
    CHECK(a.passed);
    CHECK(b.passed);
    CHECK(sample_seed(5, 4) != sample_seed(5, 5));
    CHECK(sample_seed(5, 4) != sample_seed(6, 4));
  }

  TEST_CASE("json report structure and failure reproduction") {
    SuiteReport r;
    r.suite = "bch";
    r.options.seed = 9;
    r.options.n = 3;
    r.check("law", true, 0);
    r.check("law", false, 7, "detail");
    CHECK_FALSE(r.passed);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].repro == "lbcli suite bch --n 3 --seed 9 --first 7 --samples 1");
    const auto j = nlohmann::json::parse(format_report_json(r));
    CHECK(j["passed"] == false);
    CHECK(j["laws"][0]["checked"] == 2);
    CHECK(j["laws"][0]["violated"] == 1);
    CHECK(j["failures"][0]["sample"] == 7);
  }
}
