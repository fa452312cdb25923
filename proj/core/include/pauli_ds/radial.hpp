#ifndef PAULI_DS_RADIAL_HPP
#define PAULI_DS_RADIAL_HPP

#include <complex>

#include "pauli_ds/half_int.hpp"
#include "pauli_ds/model.hpp"
#include "pauli_ds/specfun.hpp"

namespace pauli_ds {

enum class ModeFamily {
  QuantizedDS,          // polynomial 2F1, 2ME = (j + 1 + n)^2
  ContinuousAdS,        // a, b = 1 + j -+ i sqrt(2ME), any 2ME > 0
  FormalPolynomialAdS,  // 2F1(-n, n + 2j + 2; c; y), which forces 2ME = -(j + 1 + n)^2
};

/// Closed-form radial solution of the separated Pauli problem.
///
/// Big component: C * s^p(r/2) * k^q(r/2) * 2F1(a, b; c; y), where s, k are
/// sin, cos (dS) or sinh, cosh (AdS), y = radial_argument(r), and
/// (p, q, c) = (nu + 1, nu, j + 2) for delta = +1, (nu, nu + 1, j + 1) for delta = -1.
/// For AdS the factor |y|^{p/2} replaces y^{p/2}; the constant phase of the
/// negative base is absorbed into C.
///
/// E is the separation constant of the time phase exp(-i E tau(t)). It is a
/// spectral parameter, not the energy of a stationary state.
class RadialMode {
 public:
  /// L2-normalized on (0, pi) in dr. qn.n selects the level.
  static RadialMode expanding_ds(const Model& model, const QuantumNumbers& qn);

  /// Non-normalizable continuum mode with C = 1 (unit leading coefficient in |y|).
  /// Requires two_m_e > 0; qn.n is ignored.
  static RadialMode oscillating_ads(const Model& model, const QuantumNumbers& qn, double two_m_e);

  /// The terminating AdS solution with a = -n, b = n + 2j + 2. It solves the
  /// radial equation only for 2ME = -(j + 1 + n)^2, which is what this sets.
  /// Flagged as ambiguous: no discrete AdS rule is actually derived.
  static RadialMode ads_formal_polynomial(const Model& model, const QuantumNumbers& qn);

  RadialMode with_amplitude(cplx amplitude) const;

  /// Copy with E replaced while the radial function keeps its parameters.
  /// The result is no longer an exact solution; used for fault injection.
  RadialMode with_spectral_parameter(double spectral_parameter) const;

  const Model& model() const { return model_; }
  const QuantumNumbers& qn() const { return qn_; }
  ModeFamily family() const { return family_; }
  double spectral_parameter() const { return spectral_parameter_; }
  double two_m_e() const { return 2.0 * model_.mass * spectral_parameter_; }
  cplx amplitude() const { return amplitude_; }
  const HypParams& hyp() const { return hyp_; }
  int sine_power() const { return sine_power_; }
  int cosine_power() const { return cosine_power_; }
  bool is_formal() const { return family_ == ModeFamily::FormalPolynomialAdS; }

 private:
  RadialMode(const Model& model, const QuantumNumbers& qn, ModeFamily family, double spectral_parameter,
             const HypParams& hyp);

  Model model_;
  QuantumNumbers qn_;
  ModeFamily family_;
  double spectral_parameter_;
  cplx amplitude_ = 1.0;
  HypParams hyp_;
  int sine_power_;
  int cosine_power_;
};

/// E = (j + 1 + n)^2 / (2M) for the expanding model. Throws NotQuantizedError
/// for the anti-de Sitter model, DomainError for n < 0.
double spectrum(const Model& model, HalfInt j, int n);

/// The big radial component (f for delta = +1, g for delta = -1), amplitude included.
/// Throws DomainError outside the open radial domain.
cplx radial_big(const RadialMode& mode, double r);

/// d/dr of radial_big, by the product rule and hyp2f1_deriv.
cplx radial_big_derivative(const RadialMode& mode, double r);

/// Big component as a field: time_profile * radial_big.
cplx big_component(const RadialMode& mode, double t, double r);

/// The small component reconstructed from the big one:
///   delta = +1: g = -(1/2M) (1/a(t)) (d_r + nu/s(r)) f
///   delta = -1: f = +(1/2M) (1/a(t)) (d_r - nu/s(r)) g
/// with a(t) the scale factor; the time phase of the big component is included.
cplx radial_small(const RadialMode& mode, double r, double t);

struct PauliSample {
  cplx up;
  cplx down;

  double density() const { return std::norm(up) + std::norm(down); }
};

/// exp(-i E tau(t)) * big(r) * (D^j_{-m,-1/2}, D^j_{-m,+1/2})(phi, theta, 0).
PauliSample pauli_wavefunction(const RadialMode& mode, double t, double r, double theta, double phi);

/// C such that the integral over (0, pi) of |C radial_big|^2 dr equals 1.
/// Gauss-Legendre with `quadrature_points`, checked against twice as many
/// points; throws QuadratureError when they differ by more than 1e-10 relative.
double normalize_ds(const RadialMode& mode, int quadrature_points);

}  // namespace pauli_ds

#endif  // PAULI_DS_RADIAL_HPP
