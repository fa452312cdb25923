#ifndef PAULI_DS_MODEL_HPP
#define PAULI_DS_MODEL_HPP

#include <complex>
#include <string_view>

#include "pauli_ds/half_int.hpp"

namespace pauli_ds {

using cplx = std::complex<double>;

enum class ModelKind {
  ExpandingDS,     // cosh t scale factor, r in (0, pi), t real
  OscillatingAdS,  // cos t scale factor, r in (0, inf), t in (-pi/2, pi/2)
};

/// A cosmological background together with the nonrelativistic mass M.
/// Units: curvature radius = hbar = c = 1, so M, E, r and t are dimensionless.
struct Model {
  ModelKind kind = ModelKind::ExpandingDS;
  double mass = 1.0;

  static Model expanding_ds(double mass);
  static Model oscillating_ads(double mass);

  /// "ds" or "ads".
  std::string_view name() const;

  bool time_in_domain(double t) const;
  /// Open radial domain.
  bool radius_in_domain(double r) const;
};

/// Throws std::invalid_argument unless the name is "ds" or "ads".
ModelKind parse_model_kind(std::string_view name);

/// Parity sector delta = +-1; the radial potential is (nu^2 + sign nu chi)/s^2 with sign = delta.
struct ParitySector {
  int delta = +1;
  int sign() const { return delta; }
};

double scale_factor(const Model& model, double t);

/// tanh t (dS) or tan t (AdS): the time phase is exp(-i E tau(t)).
double time_phase_argument(const Model& model, double t);
/// d tau / dt: 1/cosh^2 t or 1/cos^2 t.
double time_phase_rate(const Model& model, double t);

/// exp(-i E tanh t) or exp(-i E tan t).
cplx time_profile(const Model& model, double spectral_parameter, double t);

/// y = (1 - cos r)/2 = sin^2(r/2) on [0, pi] (dS); y = (1 - cosh r)/2 = -sinh^2(r/2) on [0, inf) (AdS).
double radial_argument(const Model& model, double r);

/// sin r or sinh r.
double radial_sine(const Model& model, double r);
/// cos r or cosh r.
double radial_cosine(const Model& model, double r);

/// (nu^2 + delta nu chi)/s^2 with chi = cos r, s = sin r (dS) or cosh r, sinh r (AdS).
/// Throws SingularityError at r = 0 and (dS) r = pi, DomainError outside the domain.
double effective_potential(const Model& model, ParitySector sector, HalfInt j, double r);
/// Same with a real coupling nu, which may be negative.
double effective_potential(const Model& model, ParitySector sector, double nu, double r);

}  // namespace pauli_ds

#endif  // PAULI_DS_MODEL_HPP
