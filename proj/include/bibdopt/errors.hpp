#pragma once

#include <stdexcept>
#include <string>

namespace bibdopt {

/// Malformed input or a violated precondition. The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force routine was asked to go beyond its configured size cap.
/// The CLI maps it to exit code 3.
class ScaleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bibdopt
