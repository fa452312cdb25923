#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pauli_ds/errors.hpp"
#include "pauli_ds/verify.hpp"

namespace pauli_ds {
namespace {

// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
  std::vector<double> diagonal;
  double off = 0.0;

  // Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
  int count_below(double x) const {
    int count = 0;
    double pivot = 1.0;
    const double off_sq = off * off;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
      pivot = diagonal[i] - x - (i == 0 ? 0.0 : off_sq / pivot);
      if (pivot == 0.0) pivot = -1e-300;
      if (pivot < 0.0) ++count;
    }
    return count;
  }

  // k-th smallest eigenvalue (0-based) by bisection inside the Gershgorin interval.
  double eigenvalue(int k) const {
    const auto [lo_it, hi_it] = std::minmax_element(diagonal.begin(), diagonal.end());
    double lo = *lo_it - 2.0 * std::abs(off);
    double hi = *hi_it + 2.0 * std::abs(off);
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
};

}  // namespace

std::vector<double> fd_eigenvalues(HalfInt j, int delta, int count, int interior_points) {
  if (interior_points < 3) throw std::invalid_argument("fd_eigenvalues: need at least 3 interior points");
  if (count < 1 || count > interior_points) throw std::invalid_argument("fd_eigenvalues: bad eigenvalue count");
  const Model model = Model::expanding_ds(1.0);
  const ParitySector sector{delta};
  const double h = std::numbers::pi / (interior_points + 1);
  Tridiagonal matrix;
  matrix.off = -1.0 / (h * h);
  matrix.diagonal.resize(interior_points);
  for (int i = 0; i < interior_points; ++i) {
    matrix.diagonal[i] = 2.0 / (h * h) + effective_potential(model, sector, j, (i + 1) * h);
  }
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) out[k] = matrix.eigenvalue(k);
  return out;
}

std::vector<double> eigenvalue_oracle(const Model& model, HalfInt j, int delta, int n_max, int grid_size) {
  if (model.kind != ModelKind::ExpandingDS) {
    throw NotQuantizedError("eigenvalue_oracle: only the expanding de Sitter model has a discrete spectrum");
  }
  if (delta != 1 && delta != -1) throw DomainError("eigenvalue_oracle: delta must be +-1");
  if (n_max < 0) throw std::invalid_argument("eigenvalue_oracle: n_max must be non-negative");
  const auto coarse = fd_eigenvalues(j, delta, n_max + 1, grid_size);
  const auto fine = fd_eigenvalues(j, delta, n_max + 1, 2 * grid_size);
  for (int k = 0; k <= n_max; ++k) {
    if (std::abs(coarse[k] - fine[k]) > 1e-3 * std::abs(fine[k])) {
      throw ConvergenceError("eigenvalue_oracle: eigenvalue " + std::to_string(k) +
                             " not converged at grid size " + std::to_string(grid_size));
    }
  }
  return coarse;
}

}  // namespace pauli_ds
