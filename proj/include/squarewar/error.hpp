#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace squarewar {

enum class ErrorCode {
  InvalidColumn,
  InvalidRow,
  MalformedInput,
  OutOfBounds,
  Occupied,
  Rule4Violation,
  GameOver,
  CenterNotCanonicalizable,
  DegenerateInput,
  NotBlacksTurn,
  NotWhitesTurn,
  TooLate,
  OutOfScript,
  PreconditionViolation,
  StructuralError,
  BookMiss,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported through this type;
// callers switch on code() rather than parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace squarewar
