#ifndef ZETACERT_ERRORS_HPP
#define ZETACERT_ERRORS_HPP

#include <stdexcept>

namespace zetacert {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's contractual domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integer index outside the supported range.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation point hit the kernel singularity t = -ln(vartheta)/theta.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series exhausted its iteration budget before reaching tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its panel budget before reaching tolerance.
class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

}  // namespace zetacert

#endif
