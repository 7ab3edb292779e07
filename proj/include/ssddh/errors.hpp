#pragma once

#include <stdexcept>
#include <string>

namespace ssddh {

// Caller passed something outside an operation's preconditions.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request is well formed but beyond what the library can do at desk scale
// (field too large to scan, missing modular polynomial, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search or construction ran to completion without producing a result.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure (data corruption, exhausted retries).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssddh
