#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

// Bad user input: malformed literals, unusable dimensions, wrong ring for an operation.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual/JSON input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation over the rationalization produced a non-integral value where the
// integral ring demanded one.
struct IntegralityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation would need coefficients beyond the stored truncation order.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A recursion hit a zero pivot (e.g. a bilinear pairing vanished on a needed index).
struct PivotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wittkit
