#include "markov/error.hpp"

namespace markov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::CodMismatch: return "CodMismatch";
    case ErrorCode::NotAbsolutelyContinuous: return "NotAbsolutelyContinuous";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::NotDeterministic: return "NotDeterministic";
    case ErrorCode::NotAse: return "NotAse";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::CellMismatch: return "CellMismatch";
    case ErrorCode::NotEndo: return "NotEndo";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotASplitting: return "NotASplitting";
    case ErrorCode::NotHom: return "NotHom";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::NotAConditional: return "NotAConditional";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace markov
