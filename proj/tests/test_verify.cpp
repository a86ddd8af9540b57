#include <doctest.h>

#include "fixtures.hpp"
#include "slp/verify.hpp"

using namespace slp;

TEST_CASE("verification suite passes on the reference problem") {
  ValidatedProblem p = validate_problem(fixtures::continuous());
  std::vector<PropertyResult> results = run_verification(p, VerifyLevel::quick);
  CHECK(results.size() >= 15);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.residual);
    if (!r.expected_fail) CHECK(r.pass);
    CHECK_FALSE(r.expected_fail);  // symmetric problem: no negative controls
  }
  CHECK(all_passed(results));
}

TEST_CASE("verification flags negative controls on an asymmetric problem") {
  ValidatedProblem p = validate_problem(fixtures::asymmetric());
  std::vector<PropertyResult> results = run_verification(p, VerifyLevel::quick);
  bool saw_control = false;
  for (const auto& r : results) {
    CAPTURE(r.name);
    if (r.expected_fail) {
      saw_control = true;
      CHECK(r.pass);  // the control should show the expected large residual
    } else {
      CHECK(r.pass);
    }
  }
  CHECK(saw_control);
  CHECK(all_passed(results));
}
