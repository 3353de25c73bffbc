#pragma once

#include <stdexcept>
#include <string>

namespace iwasawa {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  IndexOutOfRange,
  OrderCapExceeded,
  DegreeMismatch,
  InvalidAction,
  NotNormal,
  UnknownName,
  LatticeCapExceeded,
  NotSchmidt,
  StructureViolation,
  TheoremViolation,
  HypothesisViolated,
  ParseError,
  NumericOverflow,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::NotSchmidt: return "NotSchmidt";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NumericOverflow: return "NumericOverflow";
  }
  return "UnknownError";
}

/// Every failure carries a kind plus a witness message naming the first
/// offending triple/row/subgroup found, so callers and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace iwasawa
