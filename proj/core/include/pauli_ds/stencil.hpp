#ifndef PAULI_DS_STENCIL_HPP
#define PAULI_DS_STENCIL_HPP

// Fourth-order central finite differences.

namespace pauli_ds::stencil {

template <class F>
auto first_derivative(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

template <class F>
auto second_derivative(F&& f, double x, double h) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h * h);
}

}  // namespace pauli_ds::stencil

#endif  // PAULI_DS_STENCIL_HPP
