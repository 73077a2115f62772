#pragma once

// Acceptance battery shared by `lattice-codes check-theorems` and the
// acceptance test binary. Each criterion has a fixed runtime budget; a
// criterion passes only when its checks hold and it finishes in budget.

#include <chrono>
#include <string>
#include <vector>

namespace latcodes {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_hold = false;
  std::string detail;
  std::chrono::milliseconds elapsed{0};
  std::chrono::milliseconds budget{0};

  bool passed() const { return checks_hold && elapsed <= budget; }
};

int criterion_count();

/// Runs criterion `id` (1-based). `threads` is forwarded to enumeration.
CriterionResult run_criterion(int id, int threads);

std::vector<CriterionResult> run_acceptance(int threads);

/// "PASS  3  title  (12 ms / 30000 ms)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace latcodes
