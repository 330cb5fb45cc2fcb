#include "ldlab/error.hpp"

namespace ldlab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNotPrimePower: return "NotPrimePower";
    case Errc::kOrderTooLarge: return "OrderTooLarge";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kEnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::kTooManyErasures: return "TooManyErasures";
    case Errc::kDuplicateEvalPoints: return "DuplicateEvalPoints";
    case Errc::kDegreeTooLarge: return "DegreeTooLarge";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kDomainError: return "DomainError";
    case Errc::kMNotPowerOfTwo: return "MNotPowerOfTwo";
    case Errc::kMExceedsN: return "MExceedsN";
    case Errc::kRadiusTooLarge: return "RadiusTooLarge";
    case Errc::kTrivialCode: return "TrivialCode";
    case Errc::kAdviceSpaceTooLarge: return "AdviceSpaceTooLarge";
    case Errc::kRankDeficient: return "RankDeficient";
    case Errc::kSpecInvalid: return "SpecInvalid";
    case Errc::kFileNotFound: return "FileNotFound";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ldlab
