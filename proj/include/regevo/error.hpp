#pragma once

#include <stdexcept>
#include <string>

namespace regevo {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unknown category, malformed config, out-of-range option.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace regevo
