#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2euler {

enum class ErrorCode {
  NotOddPrime,
  NonResidue,
  BadWitness,
  DivisionByZero,
  InexactDivision,
  DegreeError,
  NotSquarefree,
  DepthOverflow,
  NotAlmostGood,
  GoodReduction,
  FieldTooLarge,
  Ambiguous,
  HasseViolation,
  Unsupported,
  ParseError,
  InvalidArgument,
};

/// Short machine-readable token, used by the batch protocol (`ERR:<token>`).
std::string_view error_token(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace g2euler
