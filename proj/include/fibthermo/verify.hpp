#pragma once

#include <string>
#include <vector>

namespace fibthermo {
namespace verify {

struct Failure {
  std::string case_id;
  std::string expected;
  std::string got;
};

struct Report {
  std::string suite;
  long cases_run = 0;
  std::vector<Failure> failures;  // capped; failures_total carries the true count
  long failures_total = 0;
  double elapsed_seconds = 0.0;
  bool passed() const { return failures_total == 0; }
};

std::vector<std::string> suite_names();

// Runs the invariant battery of one module at its desk-scale parameters;
// "all" chains every suite. Throws std::invalid_argument on unknown names.
Report run_suite(const std::string& suite);

}  // namespace verify
}  // namespace fibthermo
