#include "kltan/error.hpp"

namespace kltan {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidCartanType: return "InvalidCartanType";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::TargetNotBelow: return "TargetNotBelow";
    case ErrorKind::TargetNotContained: return "TargetNotContained";
    case ErrorKind::LengthBoundExceeded: return "LengthBoundExceeded";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotMinimalCosetRep: return "NotMinimalCosetRep";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::ExponentOutsideCone: return "ExponentOutsideCone";
    case ErrorKind::BeyondTruncation: return "BeyondTruncation";
    case ErrorKind::InvalidIndexSequence: return "InvalidIndexSequence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace kltan
