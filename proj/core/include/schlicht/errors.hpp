#pragma once

#include <stdexcept>
#include <string>

namespace schlicht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (cut, disk, slit).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The evaluation point sits on (or numerically at) a pole of the map.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Caller-side precondition failed (parameter ranges, degenerate inputs).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure (Newton, adaptive sampling) did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated a mathematical invariant it must satisfy.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace schlicht
