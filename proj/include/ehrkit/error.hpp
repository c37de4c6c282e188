#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ehrkit {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotFullDimensional,
  Unbounded,
  NotLattice,
  OriginNotInterior,
  OriginNotInPolytope,
  NonPositiveDilate,
  NotDivisible,
  NumeratorMismatch,
  FitMismatch,
  HypothesisViolated,
  NoInteriorLatticePoint,
  BudgetExceeded,
  Inconsistent,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ehrkit
