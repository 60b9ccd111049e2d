#pragma once

#include <stdexcept>
#include <string>

namespace aef {

/// Malformed or out-of-contract input: shape mismatches, negative values,
/// incomplete allocations handed to a checker, unparsable rationals.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured search cap (allocations, removing matrices, DP states) was hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aef
