#pragma once

#include <stdexcept>

namespace steklov {

// Invalid index, argument outside a function's domain, or malformed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The boundary radius 1 + eps*rho is not positive on the quadrature nodes.
class DegenerateDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cholesky factorization of a matrix that should be positive definite failed.
class DefinitenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Job configuration could not be parsed or violates an invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steklov
