#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ldlab {

enum class Errc {
  kNotPrimePower,
  kOrderTooLarge,
  kDivisionByZero,
  kLengthMismatch,
  kEnumerationTooLarge,
  kTooManyErasures,
  kDuplicateEvalPoints,
  kDegreeTooLarge,
  kFieldMismatch,
  kDomainError,
  kMNotPowerOfTwo,
  kMExceedsN,
  kRadiusTooLarge,
  kTrivialCode,
  kAdviceSpaceTooLarge,
  kRankDeficient,
  kSpecInvalid,
  kFileNotFound,
  kParseError,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ldlab
