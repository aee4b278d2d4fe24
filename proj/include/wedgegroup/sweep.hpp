#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wedgegroup/report.hpp"

namespace wg {

/// Per-channel maxima of residuals over a sweep. A sample that throws is
/// counted as a failure; the message of the lowest failing index is kept so
/// serial and parallel runs report the same thing.
struct SweepResult {
  std::size_t samples = 0;
  std::vector<double> max_residual;
  std::size_t failures = 0;
  std::size_t first_failure_index = 0;
  std::string first_failure;

  double overall() const;
};

/// Fills `out` (one slot per channel) with the residuals of sample `index`.
using SampleKernel = std::function<void(std::size_t index, std::span<double> out)>;

SweepResult sweep_serial(std::size_t samples, std::size_t channels, const SampleKernel& kernel);

/// OpenMP max-reduction over the same kernel; identical result to
/// sweep_serial because each sample is seeded by its index alone.
SweepResult sweep_parallel(std::size_t samples, std::size_t channels, const SampleKernel& kernel, int threads);

/// threads <= 1 runs the serial kernel.
SweepResult run_sweep(std::size_t samples, std::size_t channels, const SampleKernel& kernel, int threads = 1);

/// Report named `check` whose details map channel names to their maxima.
/// Passes iff no sample threw and every channel is within tolerance.
CheckReport summarize(const std::string& check, double tolerance, const SweepResult& result,
                      const std::vector<std::string>& channel_names);

}  // namespace wg
