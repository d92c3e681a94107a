#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pg {

enum class ErrorCode {
  NotLatinSquare,
  IdentityNotZero,
  NotAssociative,
  ProductTooLarge,
  NotHallDivisor,
  OddOrder,
  NotQuaternionOrder,
  InvalidAction,
  InvalidArgument,
  UnknownGenerator,
  SyntaxError,
  EmptyRelator,
  Overflow,
  ClosureExceedsCap,
  NotTwoGroup,
  NotElementaryAbelianTwoGroup,
  SearchBudgetExceeded,
  ParseError,
  IoError,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pg
