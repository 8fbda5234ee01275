#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>

#include "spinup/errors.hpp"
#include "spinup/pipeline.hpp"
#include "spinup/symbolic_suite.hpp"

using namespace spinup;

TEST_CASE("trefoil to T_5 with one circle factor") {
  const auto r = run_theorem_pipeline(1, 2, {1});
  CHECK(r.minus.tb == 1);
  CHECK(r.plus.tb == 3);
  CHECK(r.cobordism.genus == 1);
  CHECK(r.cobordism.profile[1] == 3);
  CHECK(r.fill_minus_profile[1] == 2);
  CHECK(r.mv_bound == 4);
  CHECK(r.spun_cobordism == HomologyProfile{{0, 1}, {1, 4}, {2, 3}});
  CHECK(r.spun_end == HomologyProfile{{0, 1}, {1, 2}, {2, 1}});
  CHECK(r.spun_cobordism[1] > r.spun_end[1]);
  CHECK(r.spun_bound > r.spun_fill_minus[1]);
  CHECK(r.coincide);
  CHECK(r.distinguished);
  CHECK(r.verdict() == "distinguished");
}

TEST_CASE("an even sphere separates the classical invariants") {
  const auto r = run_theorem_pipeline(1, 2, {2});
  CHECK(r.classical_minus.tb == -2);
  CHECK(r.classical_plus.tb == -6);
  CHECK_FALSE(r.coincide);
  CHECK(r.distinguished);
}

TEST_CASE("several spheres") {
  const auto r = run_theorem_pipeline(2, 5, {1, 3});
  CHECK(r.cobordism.genus == 3);
  CHECK(r.coincide);
  CHECK(r.distinguished);
  CHECK(r.spun_cobordism[1] == r.cobordism.profile[1] + 1);
}

TEST_CASE("pipeline input validation") {
  CHECK_THROWS_AS(run_theorem_pipeline(2, 2, {1}), InvalidInput);
  CHECK_THROWS_AS(run_theorem_pipeline(0, 2, {1}), InvalidInput);
  CHECK_THROWS_AS(run_theorem_pipeline(1, 2, {0}), InvalidInput);
}

TEST_CASE("report JSON is deterministic") {
  const auto a = pair_report_to_json(run_theorem_pipeline(1, 3, {1}));
  const auto b = pair_report_to_json(run_theorem_pipeline(1, 3, {1}));
  CHECK(a.dump() == b.dump());
  CHECK(a["schema"] == kReportSchema);
  CHECK(a["verdict"] == "distinguished");
  CHECK(a["spun"]["l"] == 1);
}

TEST_CASE("residual tolerance from the environment") {
  ::unsetenv("SPINUP_TOL");
  CHECK(residual_tolerance() == kDefaultResidualTol);
  ::setenv("SPINUP_TOL", "1e-6", 1);
  CHECK(residual_tolerance() == 1e-6);
  ::setenv("SPINUP_TOL", "abc", 1);
  CHECK_THROWS_AS(residual_tolerance(), InvalidInput);
  ::setenv("SPINUP_TOL", "-1", 1);
  CHECK_THROWS_AS(residual_tolerance(), InvalidInput);
  ::unsetenv("SPINUP_TOL");
}

TEST_CASE("an injected sign error fails the contact stage") {
  SymbolicSuiteOptions opt;
  opt.samples = 1000;
  opt.inject_sign_bug = true;
  const auto rep = run_symbolic_suite(opt);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.first_failure().has_value());
  CHECK(rep.first_failure()->stage == "contact_pullback_residual");
  try {
    rep.require_pass();
    FAIL("expected a certification failure");
  } catch (const CertificationFailure& e) {
    CHECK(e.stage() == "contact_pullback_residual");
  }
}

TEST_CASE("pipeline with the symbolic suite attached") {
  PipelineOptions opt;
  opt.run_symbolic = true;
  opt.symbolic.samples = 1000;
  const auto r = run_theorem_pipeline(1, 2, {1}, opt);
  REQUIRE(r.symbolic.has_value());
  CHECK(r.symbolic->passed());
  CHECK(pair_report_to_json(r)["symbolic"]["passed"] == true);
}
