#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supercong {

enum class ErrorCode {
  NonInvertible,
  DenominatorDivisibleByP,
  ModulusMismatch,
  InvalidModulus,
  NoConvergence,
  OrderNotDividing,
  BadParameters,
  NotOneModFive,
  IsOneModFive,
  NonIntegralResult,
  InexactDivision,
  TermNotPIntegral,
  ConditionsNotMet,
  NonIntegralOffset,
  OrderMismatch,
  OutOfRange,
  TooLarge,
  PIsFive,
  Overflow,
  CacheCorrupt,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace supercong
