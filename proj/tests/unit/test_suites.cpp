#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/json_io.hpp"
#include "polecat/suites.hpp"

using namespace polecat;

namespace {

SuiteOptions small() {
  SuiteOptions o;
  o.cutoff = 3;
  o.trials = 12;
  o.seed = 3;
  return o;
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("every suite passes with small options") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const Report r = run_suite(name, small());
    CHECK(r.suite == name);
    CHECK_FALSE(r.checks.empty());
    for (const Check& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.pass);
      CHECK_FALSE(c.anchor.empty());
    }
  }
}

TEST_CASE("reports do not depend on thread count") {
  SuiteOptions one = small(), many = small();
  one.threads = 1;
  many.threads = 4;
  for (const char* name : {"tl-axioms", "confluence", "intertwine"})
    CHECK(report_json(run_suite(name, one)) == report_json(run_suite(name, many)));
}

TEST_CASE("cartan witness records which form holds") {
  for (const Check& c : run_suite("hopf-axioms", small()).checks)
    if (c.name == "cartan and coproduct")
      CHECK(c.witness == "on the nose: fails at e; with factors exchanged: holds");
}

TEST_CASE("report json") {
  Report r;
  r.suite = "x";
  r.checks.push_back({"a", "b", false, "w"});
  const std::string j = report_json(r);
  CHECK(j.find("\"format\": 1") != std::string::npos);
  CHECK(j.find("\"pass\": false") != std::string::npos);
  CHECK_FALSE(r.pass());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", small()), PreconditionError); }

}
