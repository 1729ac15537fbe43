#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedring {

enum class ErrorKind {
  MalformedSpec,
  ParseError,
  NotSubgroup,
  NotDirectSum,
  NotMultiplicative,
  IdentityNotInRe,
  NotAnIdeal,
  NotGraded,
  NotProper,
  RingMismatch,
  GroupMismatch,
  BudgetExceeded,
  InvalidSet,
  NotAdditive,
  NotMultiplicativeHom,
  UnitNotPreserved,
  NotDegreePreserving,
  KernelNotContained,
  NotSurjective,
  ShapeMismatch,
  UnknownStatement,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries the violated invariant as its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace gradedring
