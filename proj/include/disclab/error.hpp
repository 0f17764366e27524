#pragma once

#include <stdexcept>
#include <string>

namespace disclab {

enum class ErrorKind {
  InvalidArgument,
  NotSquare,
  DimensionMismatch,
  IndexOutOfRange,
  TargetSmallerThanSource,
  SizeLimit,
  NotPowerOfTwo,
  OutOfRange,
  SearchSpaceTooLarge,
  BudgetExceeded,
  EntriesOutOfRange,
  NotBinary,
  NoShatteredSet,
  NonUnitVector,
  RankDeficient,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

// True for the errors that signal an exhausted resource cap rather than bad input.
bool is_resource_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace disclab
