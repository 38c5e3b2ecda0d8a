#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace markov {

enum class ErrorCode {
  DomainMismatch,
  KindMismatch,
  UnknownLabel,
  BadSplit,
  ShapeMismatch,
  UnsupportedKind,
  CodMismatch,
  NotAbsolutelyContinuous,
  EmptySupport,
  NotCommutative,
  FactorizationFailed,
  NotDeterministic,
  NotAse,
  NotMember,
  CellMismatch,
  NotEndo,
  NotIdempotent,
  NotBalanced,
  StructureViolation,
  SizeLimitExceeded,
  NotASplitting,
  NotHom,
  ParamMismatch,
  NotAConditional,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace markov
