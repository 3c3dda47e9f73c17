#pragma once

#include <stdexcept>
#include <string>

namespace idcode {

// Numeric values are part of the C API (see idcode.h) and must stay stable.
enum class ErrorCode : int {
  Ok = 0,
  BadParams = 1,
  NotPrime = 2,
  DegreeTooLarge = 3,
  NoIrreducibleFound = 4,
  SpecMismatch = 5,
  DivisionByZero = 6,
  EvenCharacteristic = 7,
  OddCharacteristic = 8,
  OrderMismatch = 9,
  SizeGuard = 10,
  EqualPoints = 11,
  NotOnVariety = 12,
  BadVertex = 13,
  Disconnected = 14,
  TwinsPresent = 15,
  PropertyViolated = 16,
  Infeasible = 17,
  BudgetExceeded = 18,
  NotRegular = 19,
  NotClaimedTransitive = 20,
  SrgIdentityViolated = 21,
  ConstructionFailed = 22,
  Parse = 23,
  Io = 24,
  Internal = 25,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace idcode
