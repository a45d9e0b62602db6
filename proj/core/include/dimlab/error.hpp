#pragma once

#include <stdexcept>
#include <string>

namespace dimlab {

// Argument outside the mathematical domain of an operation (od(0), |core| >= 2^R, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input value: non-partition sequences, duplicate beta-set elements, bad text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index outside a Ferrers diagram.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A configured size bound was exceeded, or a fixed-width accumulator would overflow.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independently derived quantities disagree. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dimlab
