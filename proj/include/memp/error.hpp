#pragma once

#include <stdexcept>
#include <string>

namespace memp {

// Raised when an argument or precondition is violated (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a file cannot be read or written (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace memp
