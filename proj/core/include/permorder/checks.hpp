#pragma once

#include <string>
#include <vector>

namespace permorder::checks {

/// One verification check: an invariant or a grid sweep. `detail` carries the
/// first counterexample on failure, or a short measurement summary on pass.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string first_failure() const;  // empty when pass()
};

/// identities, oracle, thm1a, thm1b, thm2, lemma24, corollary. Together the
/// suites execute every module-level invariant; each invariant lives in
/// exactly one suite.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& suite);

/// Acceptance criteria 1..10. Each prints nothing; the caller renders the
/// pass/fail line. Runtime limits are part of the pass condition where the
/// criterion states one.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

int criterion_count();
CriterionResult run_criterion(int index);

}  // namespace permorder::checks
