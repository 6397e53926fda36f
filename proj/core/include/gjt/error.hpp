#pragma once

#include <stdexcept>
#include <string>

namespace gjt {

/// A parameter lies outside the range where an operation is defined.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance is larger than the configured size cap.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace gjt
