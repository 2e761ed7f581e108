#pragma once

#include <stdexcept>
#include <string>

namespace ck {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  WitnessViolation,   // a caller-supplied constructive witness was proven false
  BudgetExceeded,     // an instrumented oracle was queried past its budget
  NormKindMismatch,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ck
