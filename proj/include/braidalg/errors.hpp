#pragma once

#include <stdexcept>
#include <string>

namespace braidalg {

// Caller supplied something malformed or inconsistent (bad variable lists,
// unknown names, n < 2, ...). Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed computation hit a mathematical obstruction: division by the
// zero function, a pole during evaluation, a singular matrix.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A verification routine was handed input that violates its precondition
// (e.g. a representation that does not satisfy the source relations).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidalg
