#pragma once

#include <stdexcept>
#include <string>

namespace quiver {

/// Input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or basis exceeded its configured size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine-width integer result does not fit.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A search ran out of range without finding what it looked for.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two methods that must agree produced different answers.
class Disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quiver
