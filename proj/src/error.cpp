#include "error.hpp"

namespace idcode {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TwinsPresent: return "TwinsPresent";
    case ErrorCode::PropertyViolated: return "PropertyViolated";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotClaimedTransitive: return "NotClaimedTransitive";
    case ErrorCode::SrgIdentityViolated: return "SrgIdentityViolated";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace idcode
