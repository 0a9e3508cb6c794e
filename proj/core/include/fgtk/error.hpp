#pragma once

#include <stdexcept>
#include <string>

namespace fgtk {

enum class ErrorKind {
  InvalidLetter,
  RankMismatch,
  Parse,
  NotAGroup,
  InvalidElement,
  GroupTooLarge,
  EnumerationTooLarge,
  QuotientTooLarge,
  NoEpimorphisms,
  TupleArityMismatch,
  TupleNotBasis,
  RankTooLarge,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorKind::NoEpimorphisms: return "NoEpimorphisms";
    case ErrorKind::TupleArityMismatch: return "TupleArityMismatch";
    case ErrorKind::TupleNotBasis: return "TupleNotBasis";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Resource-cap errors map to a distinct process exit code in the CLI.
  bool is_resource_cap() const noexcept {
    return kind_ == ErrorKind::GroupTooLarge || kind_ == ErrorKind::EnumerationTooLarge ||
           kind_ == ErrorKind::QuotientTooLarge || kind_ == ErrorKind::RankTooLarge;
  }

 private:
  ErrorKind kind_;
};

}  // namespace fgtk
