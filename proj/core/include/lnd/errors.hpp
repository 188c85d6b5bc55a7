#pragma once

#include <stdexcept>
#include <string>

namespace lnd {

/// Operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation requires a proper ideal.
class UnitIdeal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured computation ceiling was hit. Callers turn this into an
/// "inconclusive" verdict; it never means the answer is negative.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lnd
