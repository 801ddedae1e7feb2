#pragma once

#include <stdexcept>
#include <string>

namespace braidnorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible matrix dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A spectral family or composition rule hit a pole. The message names the
// vanishing denominator.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain (parity, range, non-unitary
// conjugator, inconsistent alpha/d, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// cos(phi) = cos(theta)/(1 - cos(theta)) has no real solution.
class NoBraidSolutionError : public Error {
 public:
  using Error::Error;
};

// Bad command-line level request (unknown family, empty grid, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// File output failed; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidnorm
