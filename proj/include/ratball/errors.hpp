#pragma once

#include <stdexcept>
#include <string>

namespace ratball {

/// A violated precondition or malformed input. Maps to CLI exit status 1.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A consistency check inside the library failed. Maps to CLI exit status 3.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource limit was hit before a computation finished.
/// Subclasses carry whatever partial statistics are meaningful.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratball
