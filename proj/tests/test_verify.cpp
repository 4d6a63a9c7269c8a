#include <doctest.h>

#include <set>

#include "graphstab/verify.hpp"

using namespace graphstab;

TEST_CASE("every reference identity holds") {
  const VerificationReport report = verify_all();
  CHECK(report.passed());
  CHECK(report.checks.size() == 12);
  std::set<std::string> names;
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK_FALSE(c.paper_anchor.empty());
    names.insert(c.name);
  }
  CHECK(names.size() == report.checks.size());
  REQUIRE(report.find("nonlocality.lhv_contradiction") != nullptr);
  CHECK(report.find("nonlocality.lhv_contradiction")->symbolic);
  CHECK(report.find("no.such_check") == nullptr);
}

TEST_CASE("the conjugation check can fail") {
  VerifyOptions options;
  options.flip_second_conjugated_sign = true;
  const VerificationReport report = verify_all(options);
  CHECK_FALSE(report.passed());
  for (const auto& c : report.checks)
    CHECK(c.passed == (c.name != "pauli.conjugated_generator_signs"));
  CHECK(report.to_table().find("FAIL    pauli.conjugated_generator_signs") != std::string::npos);
}

TEST_CASE("tight tolerance") {
  VerifyOptions options;
  options.tolerance = 1e-14;
  CHECK(verify_all(options).passed());
}

TEST_CASE("report output is deterministic") {
  const std::string first = verify_all().to_json().dump(2);
  const std::string second = verify_all().to_json().dump(2);
  CHECK(first == second);
  const auto j = verify_all().to_json();
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 12);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("paper_anchor"));
    CHECK(c.contains("passed"));
    CHECK(c.contains("details"));
  }
}
