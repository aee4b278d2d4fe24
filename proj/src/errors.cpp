#include "wedgegroup/errors.hpp"

namespace wg {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotLorentz: return "NotLorentz";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotOrthochronous: return "NotOrthochronous";
    case ErrorCode::ZeroAxis: return "ZeroAxis";
    case ErrorCode::NotReflection: return "NotReflection";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

}  // namespace wg
