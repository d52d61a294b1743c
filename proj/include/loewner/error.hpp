#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loewner {

/// Named failure conditions raised by the toolkit.  The CLI maps the parse
/// family to exit status 2 and everything else to exit status 3.
enum class ErrorCode {
  InvalidArgument,
  DomainError,
  NoConvergence,
  DerivativeVanishes,
  Unstable,
  Diverging,
  QuadratureBudget,
  FitResidual,
  RigidityViolation,
  StepCollision,
  SelfIntersection,
  PoleProximity,
  LeftDomain,
  DomainEscape,
  ScheduleInvalid,
  RangeMismatch,
  OracleFailure,
  PreconditionFailed,
  NotSerializable,
  // parse family
  ParseError,
  MonotoneViolation,
  EmptyFile,
};

std::string_view to_string(ErrorCode code);

bool is_parse_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace loewner
