#pragma once

#include <stdexcept>
#include <string>

namespace tidal {

/// Bad arguments from a caller: unsupported type label, element outside
/// the required subset, out-of-range block size and so on.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity contradicts a property that must hold (negative
/// structure constant, non-monomial rank-2 unit Hom, ...). Always a bug or a
/// truncation problem, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tidal
