#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

/// Generators whose gcd exceeds one do not span a numerical semigroup.
class NotNumerical : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exact polynomial division when the divisor does not divide.
class NonZeroRemainder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is mathematically valid but exceeds the supported working size.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A function table does not cover every argument an identity needs.
class IncompleteTable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An internal consistency check failed; always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nsg
