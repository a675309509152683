#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jplus {

enum class ErrorCode {
  // geometry
  NotClosed,
  EdgeReversal,
  TripleOrHigherPoint,
  TangentialIntersection,
  PointOnCurve,
  // diagram
  InconsistentWinding,
  CornerPatternViolation,
  UnrealizableCode,
  BadMultiplicity,
  // constructions
  ArcNotOuter,
  OrientationMismatch,
  FaceUnbounded,
  PlacementFailure,
  ArcNotOnFace,
  // moves
  IllegalSite,
  // rendering / io
  NoGeometry,
  ParseError,
  // internal identity checks
  IdentityViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure the library reports carries one of the codes above. Identity
// violations are internal (exit code 2 in the CLI); everything else is an input
// problem (exit code 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_internal() const noexcept { return code_ == ErrorCode::IdentityViolation; }

 private:
  ErrorCode code_;
};

}  // namespace jplus
