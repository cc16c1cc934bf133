#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (m = 0, gcd(u, m) != 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotPrime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// p = 2 and p = 3 are prime but excluded from the construction.
class PrimeTooSmall : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IndexOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class PeriodMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BadCharacter : public InvalidArgument {
 public:
  BadCharacter(std::size_t offset, char c)
      : InvalidArgument("bad character '" + std::string(1, c) + "' at offset " +
                        std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class LengthMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivideByZero : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BothZero : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A structural hypothesis (2 primitive root mod p^2) does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t max_admissible_k)
      : Error(what), max_admissible_k_(max_admissible_k) {}

  // Largest k_max whose enumeration fits in the budget.
  std::size_t max_admissible_k() const noexcept { return max_admissible_k_; }

 private:
  std::size_t max_admissible_k_;
};

}  // namespace eqa
