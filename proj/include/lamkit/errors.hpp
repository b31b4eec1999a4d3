#pragma once

#include <stdexcept>
#include <string>

namespace lamkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its admissible range (e.g. genus < 2).
class InvalidParameter : public Error {
  public:
    using Error::Error;
};

/// A translation surface violates one of its structural invariants.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// The requested direction could not be decomposed into cylinders.
class DecompositionError : public Error {
  public:
    using Error::Error;
};

class NotParabolicError : public Error {
  public:
    using Error::Error;
};

class InvalidMatrixError : public Error {
  public:
    using Error::Error;
};

/// Train-track weights that break the switch condition or positivity.
class InvalidWeights : public Error {
  public:
    using Error::Error;
};

/// Input does not satisfy the hypothesis of the operation
/// (zero intersection with a twisting curve, zero b-intersection, ...).
class HypothesisViolation : public Error {
  public:
    using Error::Error;
};

class InvalidEdgeGenerator : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace lamkit
