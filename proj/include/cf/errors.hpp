#pragma once

#include <stdexcept>

namespace cf {

// Bad caller input (non-finite channel, zero coefficient vector, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Linear Diophantine equation has no integer solution (gcd does not divide lambda).
class NoSolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical failure (e.g. Cholesky on a matrix that is not positive definite).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cf
