#pragma once

#include <stdexcept>
#include <string>

namespace sausage4 {

/// Argument outside the mathematical domain of an operation
/// (division by an interval containing zero, sqrt of a negative, n <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse: unknown names, malformed flags, ranges violating invariants.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured resource cap (e.g. the enumeration oracle).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified check evaluated to false.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IOError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sausage4
