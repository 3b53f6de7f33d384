#pragma once

#include <stdexcept>
#include <string>

namespace qsord {

/// Malformed input or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive procedure was asked to run above its configured size bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qsord
