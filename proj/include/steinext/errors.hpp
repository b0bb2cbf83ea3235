#pragma once

#include <stdexcept>
#include <string>

namespace steinext {

// Invalid (series, rank) pair, malformed ring, bad subset index.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or structural invariant of an operation was violated.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The coefficient ring is too small for a vanishing argument (a needed
// q-power difference is not a unit).
class RingAssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steinext
