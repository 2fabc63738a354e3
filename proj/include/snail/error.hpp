#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snail {

enum class ErrorCode {
  OutOfRange,
  ForbiddenCorner,
  GammaOutOfRange,
  DegenerateExponent,
  BoundaryPole,
  Unbounded,
  UnsupportedFamily,
  InadmissibleClass,
  SampleSingularity,
  NonpositiveRealPart,
  NotSchwarz,
  QuadratureFailure,
  TailBoundExceeded,
  OpenCurve,
  ConditionUnmet,
  EmptyPolyline,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ForbiddenCorner: return "ForbiddenCorner";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::DegenerateExponent: return "DegenerateExponent";
    case ErrorCode::BoundaryPole: return "BoundaryPole";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InadmissibleClass: return "InadmissibleClass";
    case ErrorCode::SampleSingularity: return "SampleSingularity";
    case ErrorCode::NonpositiveRealPart: return "NonpositiveRealPart";
    case ErrorCode::NotSchwarz: return "NotSchwarz";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::TailBoundExceeded: return "TailBoundExceeded";
    case ErrorCode::OpenCurve: return "OpenCurve";
    case ErrorCode::ConditionUnmet: return "ConditionUnmet";
    case ErrorCode::EmptyPolyline: return "EmptyPolyline";
  }
  return "Unknown";
}



class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace snail
