#pragma once

#include <stdexcept>
#include <string>

namespace localdensity {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input value (zero coefficient, composite "prime", malformed text).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside the hypotheses it is valid under.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force or direct-summation oracle was asked for more work than its cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A floating-point evaluator could not round its result unambiguously.
class NumericalInstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace localdensity
