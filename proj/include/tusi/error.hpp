#pragma once

#include <stdexcept>
#include <string>

namespace tusi {

/// Malformed input: non-finite coefficients, a zero leading coefficient,
/// or a form that does not match the operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain (e.g. p = 0 given to
/// normalize()).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The closed-form route is not available in this regime. Raised when a
/// three-real-root (or double-root) reduced form is handed to Cardano.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative refinement failed; carries the best bracket reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Newton step requested where the derivative is numerically zero.
class DerivativeVanishes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tusi
