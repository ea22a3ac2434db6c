#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "diracosc/units.hpp"

namespace diracosc {

/// One pass/fail line of the verification sweep.  A check passes when
/// lower <= measured <= upper.
struct Check {
  std::string name;
  std::string description;
  double measured = 0.0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool passed = false;
};

struct VerifyConfig {
  PhysicalParams params = natural_params();
  int n_max = 3;
  int m = 0;
  double rho_max_b = 12.0;
  int num_points = 4097;
  /// Replaces the active bound of the named check ("<=" checks: upper,
  /// ">=" checks: lower).  Range checks are not affected.
  std::map<std::string, double> tolerance_overrides;
};

/// Check names in report order with their default bounds.
const std::vector<Check>& default_checks();

std::vector<Check> run_verification(const VerifyConfig& config);

bool all_passed(const std::vector<Check>& checks);

}  // namespace diracosc
