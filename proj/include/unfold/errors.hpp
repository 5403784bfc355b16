#pragma once

#include <stdexcept>
#include <string>

namespace unfold {

// Caller supplied something outside an operation's contract. CLI exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must always hold failed, which points to an arithmetic bug. CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unfold
