#pragma once

#include <stdexcept>
#include <string>

namespace gtop {

// Malformed or out-of-contract input supplied by a caller.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A size guard refused to start an exponential search.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition the library itself should have guaranteed was violated.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gtop
