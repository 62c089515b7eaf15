#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpol {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // worst residual or observed value
};

struct VerifyOptions {
  int samples = 20;
  std::uint64_t seed = 0;
};

/// stokes, su2, channel, unpolarized, degrees, qmeasures.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". Throws Error for unknown names.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace qpol
