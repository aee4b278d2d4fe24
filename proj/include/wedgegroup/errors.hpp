#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wg {

enum class ErrorCode {
  NonFinite,
  NotLorentz,
  NotProper,
  NotOrthochronous,
  ZeroAxis,
  NotReflection,
  DegenerateEdge,
  NotCommuting,
  PreconditionViolated,
  BadSpec,
  AxiomViolation,
  NotAdmissible,
  NotCyclic,
  NotSeparating,
  DimensionCap,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every validation failure in the library is reported through this type;
/// `code()` names the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wg
