#pragma once

#include <stdexcept>
#include <string>

namespace entorder {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar argument lies outside its documented range.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

// A matrix handed to a Hermitian-only routine deviates from its adjoint
// beyond tolerance.
class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

// An iterative solver hit its iteration cap before reaching tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// A matrix expected to be positive semidefinite has an eigenvalue below
// the clamping window.
class NegativeEigenvalue : public Error {
 public:
  using Error::Error;
};

// The polynomial root finder produced a root whose residual is too large.
class RootFindingFailure : public Error {
 public:
  using Error::Error;
};

// A vector that must be normalizable has (numerically) zero norm.
class ZeroVector : public Error {
 public:
  using Error::Error;
};

// Two vectors required to be orthogonal are not.
class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

// A pure state required to be a product state is entangled.
class NotSeparable : public Error {
 public:
  using Error::Error;
};

// A density-operator invariant failed; `invariant()` names which one
// ("finite_entries", "hermitian", "unit_trace", "positive_semidefinite").
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& message)
      : Error(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// A computed quantity violated an exact identity beyond numerical tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A (C, N) point lies outside the admissible negativity band.
class BandViolation : public Error {
 public:
  using Error::Error;
};

// Malformed input document (bad JSON, wrong shape, missing keys).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A self-check command found a mismatch between independent computations.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace entorder
