#pragma once

#include <stdexcept>
#include <string>

namespace mxsum {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (pole, sector, branch).
class domain_error : public error {
 public:
  using error::error;
};

/// A documented precondition of an evaluation route does not hold.
class precondition_error : public error {
 public:
  using error::error;
};

/// Series, quadrature or iteration failed to reach its tolerance.
class convergence_error : public error {
 public:
  using error::error;
};

/// The integrand produced a NaN.
class integrand_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace mxsum
