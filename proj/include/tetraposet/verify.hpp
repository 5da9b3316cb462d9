#pragma once

#include <string>
#include <vector>

namespace tetraposet {

// One theorem instance checked with both sides rendered exactly, so a failure
// is auditable without rerunning.
struct CheckResult {
  std::string name;
  int n = 0;
  std::string computed;
  std::string oracle;
  bool pass = false;
  bool informational = false;  // reported for comparison, never a failure
};

struct SuiteResult {
  std::string suite;
  int n_max = 0;  // effective bound after the TETRAPOSET_NMAX cap
  std::vector<CheckResult> checks;
  int failures() const;
  bool all_pass() const { return failures() == 0; }
  const CheckResult* first_failure() const;  // nullptr when all pass
};

inline constexpr const char* kSuiteNames[] = {"formulas", "bijections",
                                              "expansions", "trapezoid"};

// Applies the TETRAPOSET_NMAX environment cap when it is set and parseable.
int capped_nmax(int requested);

// Runs one named suite up to n_max. Independent (S, n) jobs fan out to a
// worker pool; each job is pure and results merge in job order, so the check
// list is deterministic. Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, int n_max);

}  // namespace tetraposet
