#include <ccrfock/suite.hpp>

#include <algorithm>

#include "helpers.hpp"

using namespace ccrfock;

TEST_CASE("named fixtures") {
  CHECK(make_fixture("identity", 0).is_automorphism());
  CHECK(make_fixture("squeeze", 0).matrix()(0, 0) == Complex(1.25, 0));
  CHECK(make_fixture("embed12", 0).index() == -2);
  // The random fixture is seed-dependent, the others are not.
  CHECK(testutil::dist(make_fixture("random", 3).matrix(),
                       make_fixture("random", 4).matrix()) > 1e-6);
  CHECK_THROWS_AS(make_fixture("no_such_fixture", 0), Error);
}

TEST_CASE("check names are stable and selections are validated") {
  const auto& names = suite_check_names();
  CHECK(names.size() == 15);
  CHECK(std::find(names.begin(), names.end(), "relations") != names.end());
  CHECK(std::find(names.begin(), names.end(), "gns") != names.end());

  SuiteConfig cfg;
  cfg.cutoff = 6;
  CHECK_THROWS_AS(
      run_verify_suite(make_fixture("identity", 0), cfg, {"not_a_check"}),
      Error);

  // A selection runs exactly the named checks, in suite order.
  const auto picked = run_verify_suite(make_fixture("identity", 0), cfg,
                                       {"relations", "decomposition"});
  REQUIRE(picked.size() == 2);
  CHECK(picked[0].name == "relations");
  CHECK(picked[1].name == "decomposition");
}

TEST_CASE("identity fixture passes the full battery at a tiny cutoff") {
  SuiteConfig cfg;
  cfg.cutoff = 6;
  const auto results = run_verify_suite(make_fixture("identity", 0), cfg);
  CHECK(results.size() == suite_check_names().size());
  CHECK(all_passed(results));
  for (const auto& r : results) CHECK(r.residual <= r.tolerance);
}

TEST_CASE("squeeze fixture passes everything at cutoff 40") {
  // The strong-squeeze reference case: every check, default tolerances.
  SuiteConfig cfg;
  cfg.cutoff = 40;
  const auto results = run_verify_suite(make_fixture("squeeze", 0), cfg);
  CHECK(all_passed(results));
}

TEST_CASE("embedding fixture passes everything at cutoff 12") {
  SuiteConfig cfg;
  cfg.cutoff = 12;
  const auto results = run_verify_suite(make_fixture("embed12", 0), cfg);
  CHECK(all_passed(results));
  // And the exactness is genuine, not tolerance slack: every check except
  // the Weyl transport (whose dense matrix exponentials round at ~1e-9)
  // lands far below the structural tier.
  double worst = 0.0;
  for (const auto& r : results)
    if (r.name != "intertwiner-weyl") worst = std::max(worst, r.residual);
  CHECK(worst < 1e-10);
  for (const auto& r : results)
    if (r.name == "intertwiner-weyl") CHECK(r.residual < 1e-8);
}

TEST_CASE("all_passed distinguishes failure") {
  std::vector<CheckResult> rs = {{"a", 0.0, 1.0, true, ""},
                                 {"b", 2.0, 1.0, false, ""}};
  CHECK_FALSE(all_passed(rs));
  rs[1].pass = true;
  CHECK(all_passed(rs));
  CHECK(all_passed({}));
}
