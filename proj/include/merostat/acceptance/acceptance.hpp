#pragma once

// The acceptance suite: fourteen end-to-end criteria, each checked against an
// oracle that does not share code with the path under test where possible.

#include <string>
#include <vector>

namespace merostat::acceptance {

inline constexpr int kCriterionCount = 14;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs one criterion (1..14).  Exceptions raised inside a criterion are
/// caught and reported as a failure with the error text as detail.
CriterionResult run_criterion(int id);

/// Runs the selected criteria, or all of them when `only` is empty.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

/// "AC01 PASS  name: detail (0.12 s)".
std::string format_line(const CriterionResult& r);

}  // namespace merostat::acceptance
