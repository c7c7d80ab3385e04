#pragma once

#include <stdexcept>
#include <string>

namespace ucf {

/// Malformed or out-of-contract arguments: unsatisfiable pairs, bad element
/// indices, malformed family files.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds what the representation or the
/// exhaustive search can handle.
class unsupported_scale : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A postcondition asserted at runtime did not hold.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ucf
