#ifndef PAULI_DS_QUADRATURE_HPP
#define PAULI_DS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace pauli_ds {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Newton iteration on P_n; nodes are accurate to machine precision.
  explicit GaussLegendreRule(int points);

  /// Integral of f over [lo, hi].
  double integrate(const std::function<double(double)>& f, double lo, double hi) const;
};

}  // namespace pauli_ds

#endif  // PAULI_DS_QUADRATURE_HPP
