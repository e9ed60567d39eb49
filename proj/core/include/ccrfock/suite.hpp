#pragma once

#include <string>
#include <vector>

#include "ccrfock/implementer.hpp"

namespace ccrfock {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
  std::string note;
};

struct SuiteConfig {
  int cutoff = 16;
  double tol_structural = kTolStructural;
  double tol_composite = kTolComposite;
  double tol_truncation = kTolTruncation;
  std::uint64_t seed = 7;
  int max_alpha_len = 2;
};

// Names understood by run_verify_suite; an empty selection runs all of them.
const std::vector<std::string>& suite_check_names();

// Deterministic verification battery for one operator. Residual-producing
// failures are reported in the results; structurally invalid inputs still
// throw.
std::vector<CheckResult> run_verify_suite(const BogoliubovOperator& v,
                                          const SuiteConfig& config,
                                          const std::vector<std::string>& selection = {});

bool all_passed(const std::vector<CheckResult>& results);

// Named example operators: "identity" (m = M = 1), "squeeze" (the rational
// one-mode squeeze), "embed12" (the mode-doubling isometry m = 1, M = 2),
// "random" (seeded U_Z W with m = 1, M = 2).
BogoliubovOperator make_fixture(const std::string& name, std::uint64_t seed);

}  // namespace ccrfock
