#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kltan {

// Every domain failure the library reports. The CLI maps these to exit code 1
// and serializes the kind name verbatim.
enum class ErrorKind {
  InvalidCartanType,
  LetterOutOfRange,
  RankMismatch,
  NotReduced,
  NotBelow,
  TargetNotBelow,
  TargetNotContained,
  LengthBoundExceeded,
  GroupTooLarge,
  NotMember,
  NotMinimalCosetRep,
  WrongType,
  ExponentOutsideCone,
  BeyondTruncation,
  InvalidIndexSequence,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace kltan
