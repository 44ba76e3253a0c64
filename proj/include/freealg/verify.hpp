#pragma once

/*
 * The verification suite behind `freealg verify` and the acceptance test
 * binary: one check per claim, each reporting pass/fail, a detail line
 * and its runtime.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace freealg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyConfig {
  int weight_budget = 1000;       // caps each check's default weight bound
  std::uint64_t seed = 20191118;  // drives the randomized checks
  bool parallel = true;
};

CheckResult check_constants_certification(const VerifyConfig& cfg);
CheckResult check_kernel_equals_rf(const VerifyConfig& cfg);
CheckResult check_freeness(const VerifyConfig& cfg);
CheckResult check_same_kernel_theorem(const VerifyConfig& cfg);
CheckResult check_absolute_constants(const VerifyConfig& cfg);
CheckResult check_rfn_spans(const VerifyConfig& cfg);
CheckResult check_nabla_commutation(const VerifyConfig& cfg);
CheckResult check_analytic_properties(const VerifyConfig& cfg);

std::vector<CheckResult> run_verification(const VerifyConfig& cfg);

}  // namespace freealg
