#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or incomplete configuration (missing callable, bad variant/parameter combination).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series could not be summed to the requested accuracy.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// No sign change of the target function was found in (0, 1).
class NoRootError : public Error {
 public:
  enum class Sign { Positive, Negative };

  NoRootError(const std::string& what, Sign sign) : Error(what), sign_(sign) {}

  /// Sign the function kept over the whole scan.
  Sign sign() const noexcept { return sign_; }

 private:
  Sign sign_;
};

/// Coefficient constraints admit no positive solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A test function fails the hypothesis it was built to satisfy.
class InvalidTestFunction : public Error {
 public:
  using Error::Error;
};

/// The quadrature integrand is non-finite or non-positive on the contour.
class SingularIntegrandError : public Error {
 public:
  using Error::Error;
};

}  // namespace bohr
