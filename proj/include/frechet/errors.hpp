#pragma once

#include <stdexcept>
#include <string>

namespace frechet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of a gamma factor.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested power moment does not exist.
class DivergentMoment : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Contour abscissa does not separate the integrand's poles.
class ContourError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Fréchet transform via Laplace requested with neither f nor L[f].
class MissingLaplace : public Error {
 public:
  using Error::Error;
};

}  // namespace frechet
