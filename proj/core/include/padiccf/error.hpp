#pragma once

#include <stdexcept>
#include <string>

namespace padiccf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violated a documented precondition (zero where nonzero is
// required, a non-prime modulus, an out-of-range index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Digit extraction could not certify the requested digits within the
// working-precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace padiccf
