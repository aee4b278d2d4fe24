#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wg {

/// Outcome of a randomized or exhaustive verification.
struct CheckReport {
  std::string check;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> diagnostics;

  /// Folds a residual into max_residual; NaN counts as +inf.
  void record(double residual)
  {
    if (!(residual == residual)) residual = std::numeric_limits<double>::infinity();
    if (residual > max_residual) max_residual = residual;
  }

  void finalize() { pass = pass && max_residual <= tolerance; }
};

}  // namespace wg
