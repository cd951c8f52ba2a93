#pragma once

#include <stdexcept>
#include <string>

namespace looijenga {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ranks of the operands do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (odd Hessian diagonal, non-unimodular A, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Singular or otherwise degenerate input where a nondegenerate one is required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A point is off the locus t1 x1 + t2 x2 = -phi(y).
class LocusError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_bound, int radius)
      : Error(what), achieved_bound_(achieved_bound), radius_(radius) {}

  /// Tail bound reached at the radius cap.
  double achieved_bound() const noexcept { return achieved_bound_; }
  int radius() const noexcept { return radius_; }

 private:
  double achieved_bound_;
  int radius_;
};

}  // namespace looijenga
