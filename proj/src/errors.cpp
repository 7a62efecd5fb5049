#include "supercong/errors.hpp"

namespace supercong {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OrderNotDividing: return "OrderNotDividing";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotOneModFive: return "NotOneModFive";
    case ErrorCode::IsOneModFive: return "IsOneModFive";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::TermNotPIntegral: return "TermNotPIntegral";
    case ErrorCode::ConditionsNotMet: return "ConditionsNotMet";
    case ErrorCode::NonIntegralOffset: return "NonIntegralOffset";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PIsFive: return "PIsFive";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

}  // namespace supercong
