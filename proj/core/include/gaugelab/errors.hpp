#pragma once

#include <stdexcept>
#include <string>

namespace gaugelab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class NonNeutralSource : public Error {
 public:
  using Error::Error;
};

class SmearingTooNarrow : public Error {
 public:
  using Error::Error;
};

class QuadratureTooCoarse : public Error {
 public:
  using Error::Error;
};

class NonTransverseInput : public Error {
 public:
  using Error::Error;
};

class OutOfTrustedRegion : public Error {
 public:
  using Error::Error;
};

class InconsistentPotentials : public Error {
 public:
  using Error::Error;
};

class UnknownVariant : public Error {
 public:
  using Error::Error;
};

class StabilityViolation : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaugelab
