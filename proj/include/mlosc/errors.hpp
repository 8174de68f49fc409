#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlosc {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An ordering term or weight sum violates its defining constraint.
class ConstraintViolation : public Error {
public:
  ConstraintViolation(std::size_t term_index, std::string constraint,
                      const std::string& message)
      : Error(message), term_index(term_index), constraint(std::move(constraint)) {}

  std::size_t term_index;
  std::string constraint;
};

class UnknownScheme : public Error {
public:
  using Error::Error;
};

/// Evaluation requested at (or within 1e-14 of) a pole of the mass profile.
class SingularPoint : public Error {
public:
  using Error::Error;
};

/// The spectral radicand k + hbar^2 lambda^2 ((g-a)^2 + 4 ag) is negative.
class ImaginaryMu : public Error {
public:
  ImaginaryMu(double radicand, const std::string& message)
      : Error(message), radicand(radicand) {}

  double radicand;
};

class WrongRegime : public Error {
public:
  using Error::Error;
};

class InvalidAmplitude : public Error {
public:
  using Error::Error;
};

class PoleAtNonPositiveInteger : public Error {
public:
  using Error::Error;
};

class BadParameters : public Error {
public:
  using Error::Error;
};

class NoConvergence : public Error {
public:
  using Error::Error;
};

class NonFiniteSample : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class IntegrationFailure : public Error {
public:
  using Error::Error;
};

class SingularCoefficient : public Error {
public:
  using Error::Error;
};

/// Ordering with gamma_bar < alpha_bar: eigenfunctions diverge at the
/// interval ends, so no normalizable eigenstate exists.
class SingularOrdering : public Error {
public:
  using Error::Error;
};

class MuOutOfRange : public Error {
public:
  using Error::Error;
};

class NoBoundStates : public Error {
public:
  using Error::Error;
};

}  // namespace mlosc
