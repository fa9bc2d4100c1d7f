#pragma once

#include <stdexcept>
#include <string>

namespace iyb {

/// Operand shapes do not fit together (matrix dimensions, vector lengths).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live over different coefficient rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A modulus that was required to be prime is not.
class NotPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical input failed (non-square, not nilpotent,
/// constraint violation, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound was hit. Computations never silently truncate;
/// they throw this instead.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (files, command-line values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iyb
