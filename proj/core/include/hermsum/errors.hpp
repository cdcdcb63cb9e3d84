#pragma once

#include <stdexcept>
#include <string>

namespace hermsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: non-positive d, r, bound, class index out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Squarefree d whose class number is not 1, 2 or 3.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

// A value left the checked 64-bit range, or a DP target exceeded its cap.
class Overflow : public Error {
 public:
  using Error::Error;
};

// An encoded constant disagrees with its bounded recomputation.
class CrossCheckFailed : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace hermsum
