#ifndef PAULI_DS_VERIFY_HPP
#define PAULI_DS_VERIFY_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pauli_ds/half_int.hpp"
#include "pauli_ds/model.hpp"
#include "pauli_ds/radial.hpp"

namespace pauli_ds {

/// Equations whose residuals are audited. The `AdS*` ids are the
/// anti-de Sitter counterparts of the de Sitter equations.
enum class EquationId {
  RelativisticFirstOrder,  // parity-reduced Dirac system (dS)
  ReducedSystem,           // nonrelativistic first-order pair (dS)
  PauliPDE,                // (t, r) Pauli equation for the big component (dS)
  RadialODE,               // separated radial equation (dS)
  AdSSystem,               // parity-reduced Dirac system (AdS)
  AdSReducedSystem,
  AdSPDE,
  AdSRadialODE,
};

std::string_view to_string(EquationId id);
/// Throws std::invalid_argument for unknown names.
EquationId parse_equation_id(std::string_view name);

/// Radial stencil step used by every residual engine.
inline constexpr double kRadialStep = 1e-3;

/// Evaluation points strictly inside a model's open (t, r) domain.
struct Grid {
  std::vector<double> r_points;
  std::vector<double> t_points;
  double margin = 0.05;

  /// nr x nt uniform points. r spans [margin, pi - margin] (dS) or
  /// [margin, r_max] (AdS); t spans [-t_max, t_max] with t_max = 2 (dS) or
  /// min(1.2, pi/2 - margin) (AdS). Throws GridError for empty grids.
  static Grid uniform(const Model& model, int nr, int nt, double margin = 0.05, double ads_r_max = 3.0);

  /// Throws GridError unless every point and its radial stencil (+-2h) lies
  /// inside the open domain of `model`.
  void validate(const Model& model) const;
};

struct GridSummary {
  int r_count = 0;
  int t_count = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double margin = 0.0;
};

GridSummary summarize(const Grid& grid);

struct ModeLabel {
  ModelKind model = ModelKind::ExpandingDS;
  QuantumNumbers qn;
  double spectral_parameter = 0.0;
  double mass = 1.0;
};

ModeLabel label_of(const RadialMode& mode);

/// Residuals are divided by `scale`, the largest |big component| on the grid,
/// so max_abs and rms are relative and comparable across modes.
struct ResidualReport {
  EquationId equation_id = EquationId::RadialODE;
  double max_abs = 0.0;
  double rms = 0.0;
  double scale = 0.0;
  GridSummary grid;
  ModeLabel mode;
};

/// Deliberate corruptions of the candidate solution, for sanity checks.
struct FaultInjection {
  /// E is multiplied by (1 + e_relative_shift) while the radial function is kept.
  double e_relative_shift = 0.0;
  /// Use the other model's time phase (tanh <-> tan).
  bool swap_time_profile = false;
  /// Replace the reconstructed small component by zero.
  bool zero_small_component = false;

  bool any() const { return e_relative_shift != 0.0 || swap_time_profile || zero_small_component; }
};

/// f'' - V f + 2ME f on the big component; f'' by fourth-order stencil.
ResidualReport radial_ode_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault = {});

/// i d_t F + (1/2M) (1/a^2(t)) (d_r^2 - V) F for F = exp(-i E tau(t)) f(r);
/// d_t analytic, d_r^2 by stencil.
ResidualReport pauli_pde_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault = {});

/// Both equations of the nonrelativistic first-order pair, e.g. for delta = +1
///   (1/a) (d_r + nu/s) f + 2M g = 0,   (1/a) (d_r - nu/s) g - i d_t f = 0,
/// with g from radial_small. d_r by stencil, d_t analytic.
ResidualReport first_order_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault = {});

/// Residual of the exact parity-reduced Dirac pair (divided by a(t)),
///   (1/a)(d_r + nu/s) F + (i d_t + delta M) G = 0,
///   (1/a)(d_r - nu/s) G - (i d_t - delta M) F = 0,
/// on F, G = exp(-i M t) x (nonrelativistic big, small). The mass terms are
/// applied analytically to the rest phase.
ResidualReport relativistic_residual(const RadialMode& mode, const Grid& grid);

/// Family of modes followed through the nonrelativistic limit.
struct ModeFamilySpec {
  ModelKind model = ModelKind::ExpandingDS;
  QuantumNumbers qn;
  /// 2ME held fixed across masses (AdS only; dS uses the quantized value).
  double two_m_e = 1.0;
};

RadialMode make_mode(const ModeFamilySpec& family, double mass);

struct ScalingPoint {
  double mass = 0.0;
  double residual = 0.0;
};

/// relativistic_residual for each mass. Requires >= 2 strictly increasing masses.
std::vector<ScalingPoint> relativistic_limit_scaling(const ModeFamilySpec& family, std::span<const double> masses,
                                                     const Grid& grid);

/// Lowest `count` eigenvalues of -d^2/dr^2 + V on (0, pi) with Dirichlet edges,
/// discretized by the 3-point Laplacian on `interior_points` uniform points
/// (h = pi / (interior_points + 1)). Sturm-sequence bisection on the
/// tridiagonal matrix. Returns 2ME values.
std::vector<double> fd_eigenvalues(HalfInt j, int delta, int count, int interior_points);

/// fd_eigenvalues for n = 0..n_max, checked against a grid of twice the size;
/// throws ConvergenceError if any eigenvalue moves by more than 1e-3 relative.
std::vector<double> eigenvalue_oracle(const Model& model, HalfInt j, int delta, int n_max, int grid_size);

/// Gram matrix of normalized dS modes n, n' = 0..n_max in L2((0, pi), dr).
std::vector<std::vector<double>> orthogonality_gram(HalfInt j, int delta, int n_max, int quadrature_points = 128);

/// max | |Psi(t1, x)|^2 - |Psi(t2, x)|^2 | over `samples` random (t1, t2, r, theta, phi)
/// drawn inside the grid's ranges.
double density_stationarity(const RadialMode& mode, const Grid& grid, int samples, unsigned seed = 12345);

}  // namespace pauli_ds

#endif  // PAULI_DS_VERIFY_HPP
