#pragma once

#include <string>
#include <vector>

#include "tautint/universal.hpp"

namespace tautint {

enum class Suite { fast, full };

/// One verification finding.  Hard checks gate the exit code; soft checks
/// adjudicate formulas transcribed from the source material and are
/// reported but never fail the run.
struct CheckResult {
  std::string name;
  bool hard = true;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(UniversalEngine& engine, Suite suite);

bool all_hard_passed(const std::vector<CheckResult>& results);

}  // namespace tautint
