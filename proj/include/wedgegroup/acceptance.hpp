#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgegroup/reconstruction.hpp"
#include "wedgegroup/report.hpp"
#include "wedgegroup/sampling.hpp"

namespace wg {

enum class SuiteLevel { Quick, Full };

struct SuiteOptions {
  std::uint64_t seed = 42;
  SuiteLevel level = SuiteLevel::Full;  // Quick divides every sample count by 10
  int threads = 1;
  bool force_fail = false;  // append a criterion that always fails
};

struct CriterionResult {
  int id = 0;
  std::string name;
  CheckReport report;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 means unlimited

  bool within_time() const { return time_limit <= 0.0 || seconds <= time_limit; }
  bool pass() const { return report.pass && within_time(); }
};

inline constexpr int kCriterionCount = 9;

/// Runs one of criteria 1..8. Criterion 9 is the aggregate produced by
/// run_acceptance.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Criteria 1..8 followed by the aggregate criterion 9 (all passed within
/// 60 s in total), then the forced failure if requested.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options);

/// Conjugated map with G = 1 + 0.3 N for Gaussian N; complex entries when
/// `complex_entries` is set.
MapSpec random_conjugated_spec(Sampler& s, bool complex_entries);

}  // namespace wg
