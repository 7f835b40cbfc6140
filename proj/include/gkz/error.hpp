#ifndef GKZ_ERROR_HPP
#define GKZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorCode {
  NotFullRank,
  LatticeNotSpanned,
  NoXi,
  NoSuchBlockStructure,
  UnknownName,
  DegenerateCone,
  TooLarge,
  ConfigMismatch,
  DimensionMismatch,
  LeavesConfiguration,
  NotNegativeInteger,
  SingularOnCycle,
  NotConverged,
  UnsupportedParameters,
  PoleInC,
  PoleInGamma,
  OutOfDomain,
  FitUnstable,
  ParseError,
  UsageError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind of failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
  {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::NotFullRank: return "NotFullRank";
  case ErrorCode::LatticeNotSpanned: return "LatticeNotSpanned";
  case ErrorCode::NoXi: return "NoXi";
  case ErrorCode::NoSuchBlockStructure: return "NoSuchBlockStructure";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::DegenerateCone: return "DegenerateCone";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::ConfigMismatch: return "ConfigMismatch";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::LeavesConfiguration: return "LeavesConfiguration";
  case ErrorCode::NotNegativeInteger: return "NotNegativeInteger";
  case ErrorCode::SingularOnCycle: return "SingularOnCycle";
  case ErrorCode::NotConverged: return "NotConverged";
  case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
  case ErrorCode::PoleInC: return "PoleInC";
  case ErrorCode::PoleInGamma: return "PoleInGamma";
  case ErrorCode::OutOfDomain: return "OutOfDomain";
  case ErrorCode::FitUnstable: return "FitUnstable";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::UsageError: return "UsageError";
  case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace gkz

#endif // GKZ_ERROR_HPP
