#include "mfa/error.hpp"

namespace mfa {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::WeightSum: return "WeightSumError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Overlap: return "OverlapError";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::EmptyWord: return "EmptyWordError";
    case ErrorKind::Bracket: return "BracketError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Consistency: return "ConsistencyError";
    case ErrorKind::Denominator: return "DenominatorError";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::WindowRange: return "WindowRangeError";
    case ErrorKind::SizeCap: return "SizeCapError";
    case ErrorKind::EmptyAlphabet: return "EmptyAlphabetError";
    case ErrorKind::NeedLargerN: return "NeedLargerN";
    case ErrorKind::NoGeometry: return "NoGeometryError";
    case ErrorKind::Budget: return "BudgetError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace mfa
