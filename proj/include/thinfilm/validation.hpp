#pragma once

// Self-checks run by `thinfilm validate --suite NAME`.  Each suite evaluates
// one family of identities or reference solutions on a fixed grid and
// reports the worst observed error against its tolerance.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thinfilm {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Empty optional for an unknown suite name.
std::optional<SuiteReport> run_suite(std::string_view name);

}  // namespace thinfilm
