#ifndef PAULI_DS_ERRORS_HPP
#define PAULI_DS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pauli_ds {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Hypergeometric lower parameter hits a non-positive integer before the
// series terminates.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented evaluation branch that is deliberately unsupported.
class NotImplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Evaluation at a genuine singular point of the reduced equations.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Discrete spectrum requested for a model that has none.
class NotQuantizedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A residual grid whose finite-difference stencil leaves the open domain.
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pauli_ds

#endif  // PAULI_DS_ERRORS_HPP
