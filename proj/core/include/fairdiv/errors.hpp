#pragma once

#include <stdexcept>

namespace fairdiv {

// Input file or literal could not be parsed. CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation precondition does not hold. CLI exit code 3.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration or state-space budget was exceeded. CLI exit code 4.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A guarantee the algorithms establish was observed broken at runtime;
// always a bug, never an input problem.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fairdiv
