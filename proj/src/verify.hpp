#pragma once

#include <string>
#include <vector>

namespace curvesi {

struct VerifyReport {
  std::string suite;
  bool passed;
  std::vector<std::string> lines;  // per-check results; failures are prefixed "FAIL"
};

/// Named verification suites: appendix-oracle, surgery-invariants, table1,
/// extremal, pants, pants-extended, symmetry, growth, min-length, and "all"
/// (everything except pants-extended).
VerifyReport run_suite(const std::string& name, int threads = 0);

std::vector<std::string> suite_names();

/// Reference census data for the table1 suite: counts[L-1][k] = number of
/// distinct primitive classes of length L with SI k, lengths 1..12.
const std::vector<std::vector<long long>>& reference_table1();

}  // namespace curvesi
