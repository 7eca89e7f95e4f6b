#pragma once

#include <stdexcept>

namespace maxent {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a precondition (non-finite, negative, out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// r has positive mass where p has none: the log-likelihood is -inf.
class SupportMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

// The number of integer compositions exceeds the configured cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// No type class falls inside the coherence window.
class NoCoherentType : public Error {
 public:
  using Error::Error;
};

// No simplex grid point satisfies the constraint window.
class NoFeasiblePoint : public Error {
 public:
  using Error::Error;
};

// Problem-file parsing failed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxent
