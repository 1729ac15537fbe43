#include "gradedring/error.hpp"

namespace gradedring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::IdentityNotInRe: return "IdentityNotInRe";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::NotAdditive: return "NotAdditive";
    case ErrorKind::NotMultiplicativeHom: return "NotMultiplicative";
    case ErrorKind::UnitNotPreserved: return "UnitNotPreserved";
    case ErrorKind::NotDegreePreserving: return "NotDegreePreserving";
    case ErrorKind::KernelNotContained: return "KernelNotContained";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
  }
  return "Unknown";
}

}  // namespace gradedring
