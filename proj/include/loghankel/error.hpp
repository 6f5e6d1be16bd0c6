#pragma once

#include <stdexcept>
#include <string>

namespace loghankel {

// Root of every error the library throws. Callers that only need to know
// "bad input vs. numerical trouble" can catch the two intermediate bases.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Series constant term vanishes where a reciprocal is required.
class SingularInputError : public InputError {
 public:
  using InputError::InputError;
};

// Series is not normalized the way an operation needs (a0 = 1 for log,
// a0 = 0 for rotation, p0 = 1 for class construction).
class NormalizationError : public InputError {
 public:
  using InputError::InputError;
};

// Parameter sits on a pole of a closed-form expression.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// Rational function evaluated at one of its poles.
class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace loghankel
