#pragma once

#include <stdexcept>
#include <string>

namespace starprod {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the operation's domain (bad grade, negative power, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact division by i*hbar was requested on a term without an hbar factor.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A star square is not a phase-space-constant scalar.
class NotSplittableError : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue would need a square root outside the exact scalar ring.
class IrrationalEigenvalueError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace starprod
