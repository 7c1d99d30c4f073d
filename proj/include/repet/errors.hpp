#pragma once

#include <stdexcept>
#include <string>

namespace repet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Thrown by divide_exact when the division leaves a remainder. The remainder
// is carried as a decimal string so callers can report the exact failing value.
class NotDivisible : public Error {
 public:
  NotDivisible(std::string dividend, std::string divisor, std::string remainder)
      : Error(dividend + " is not divisible by " + divisor + " (remainder " +
              remainder + ")"),
        remainder_(std::move(remainder)) {}

  const std::string& remainder_decimal() const { return remainder_; }

 private:
  std::string remainder_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Raised when a requested construction would exceed the configured digit guard.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class MalformedTranscript : public Error {
 public:
  using Error::Error;
};

class CacheCorrupt : public Error {
 public:
  using Error::Error;
};

// Internal consistency fault: an invariant the library itself guarantees was
// observed broken. Never part of the recoverable error surface.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace repet
