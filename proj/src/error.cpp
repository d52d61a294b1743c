#include "loewner/error.hpp"

namespace loewner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::Diverging: return "Diverging";
    case ErrorCode::QuadratureBudget: return "QuadratureBudget";
    case ErrorCode::FitResidual: return "FitResidual";
    case ErrorCode::RigidityViolation: return "RigidityViolation";
    case ErrorCode::StepCollision: return "StepCollision";
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::DomainEscape: return "DomainEscape";
    case ErrorCode::ScheduleInvalid: return "ScheduleInvalid";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotSerializable: return "NotSerializable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MonotoneViolation: return "MonotoneViolation";
    case ErrorCode::EmptyFile: return "EmptyFile";
  }
  return "Unknown";
}

bool is_parse_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::MonotoneViolation || code == ErrorCode::EmptyFile;
}

}  // namespace loewner
