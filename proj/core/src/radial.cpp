#include "pauli_ds/radial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pauli_ds/angular.hpp"
#include "pauli_ds/errors.hpp"
#include "pauli_ds/quadrature.hpp"

namespace pauli_ds {
namespace {

constexpr int kDefaultQuadraturePoints = 64;

bool is_ds(const Model& model) { return model.kind == ModelKind::ExpandingDS; }

void require_radius(const RadialMode& mode, double r) {
  if (!mode.model().radius_in_domain(r)) {
    throw DomainError("radial mode: r = " + std::to_string(r) + " outside the open radial domain");
  }
}

struct HalfAngle {
  double s;  // sin(r/2) or sinh(r/2)
  double k;  // cos(r/2) or cosh(r/2)
};

HalfAngle half_angle(const Model& model, double r) {
  if (is_ds(model)) return {std::sin(0.5 * r), std::cos(0.5 * r)};
  return {std::sinh(0.5 * r), std::cosh(0.5 * r)};
}

// c = j + 2 for the delta = +1 component, j + 1 for delta = -1.
double lower_parameter(const QuantumNumbers& qn) { return qn.j.value() + (qn.delta > 0 ? 2.0 : 1.0); }

}  // namespace

RadialMode::RadialMode(const Model& model, const QuantumNumbers& qn, ModeFamily family,
                       double spectral_parameter, const HypParams& hyp)
    : model_(model), qn_(qn), family_(family), spectral_parameter_(spectral_parameter), hyp_(hyp) {
  const int nu = qn.nu();
  sine_power_ = qn.delta > 0 ? nu + 1 : nu;
  cosine_power_ = qn.delta > 0 ? nu : nu + 1;
}

RadialMode RadialMode::expanding_ds(const Model& model, const QuantumNumbers& qn) {
  if (!is_ds(model)) throw DomainError("expanding_ds: model must be the expanding de Sitter model");
  qn.validate();
  const double jv = qn.j.value();
  const HypParams hyp(-double(qn.n), qn.n + 2.0 * jv + 2.0, lower_parameter(qn));
  RadialMode mode(model, qn, ModeFamily::QuantizedDS, spectrum(model, qn.j, qn.n), hyp);
  mode.amplitude_ = normalize_ds(mode, kDefaultQuadraturePoints);
  return mode;
}

RadialMode RadialMode::oscillating_ads(const Model& model, const QuantumNumbers& qn, double two_m_e) {
  if (is_ds(model)) throw DomainError("oscillating_ads: model must be the anti-de Sitter model");
  if (!(two_m_e > 0.0)) throw DomainError("oscillating_ads: 2ME must be positive");
  QuantumNumbers labels = qn;
  labels.n = 0;
  labels.validate();
  const double kappa = std::sqrt(two_m_e);
  const double re = 1.0 + qn.j.value();
  const HypParams hyp({re, -kappa}, {re, kappa}, lower_parameter(labels));
  return RadialMode(model, labels, ModeFamily::ContinuousAdS, two_m_e / (2.0 * model.mass), hyp);
}

RadialMode RadialMode::ads_formal_polynomial(const Model& model, const QuantumNumbers& qn) {
  if (is_ds(model)) throw DomainError("ads_formal_polynomial: model must be the anti-de Sitter model");
  qn.validate();
  const double jv = qn.j.value();
  const double root = jv + 1.0 + qn.n;
  const HypParams hyp(-double(qn.n), qn.n + 2.0 * jv + 2.0, lower_parameter(qn));
  return RadialMode(model, qn, ModeFamily::FormalPolynomialAdS, -root * root / (2.0 * model.mass), hyp);
}

RadialMode RadialMode::with_amplitude(cplx amplitude) const {
  RadialMode copy = *this;
  copy.amplitude_ = amplitude;
  return copy;
}

RadialMode RadialMode::with_spectral_parameter(double spectral_parameter) const {
  RadialMode copy = *this;
  copy.spectral_parameter_ = spectral_parameter;
  return copy;
}

double spectrum(const Model& model, HalfInt j, int n) {
  if (!is_ds(model)) {
    throw NotQuantizedError("spectrum: the oscillating anti-de Sitter model has no discrete spectrum");
  }
  if (n < 0) throw DomainError("spectrum: n must be non-negative");
  const double root = j.value() + 1.0 + n;
  return root * root / (2.0 * model.mass);
}

cplx radial_big(const RadialMode& mode, double r) {
  require_radius(mode, r);
  const auto [s, k] = half_angle(mode.model(), r);
  const double prefactor = std::pow(s, mode.sine_power()) * std::pow(k, mode.cosine_power());
  return mode.amplitude() * prefactor * hyp2f1(mode.hyp(), radial_argument(mode.model(), r));
}

cplx radial_big_derivative(const RadialMode& mode, double r) {
  require_radius(mode, r);
  const Model& model = mode.model();
  const auto [s, k] = half_angle(model, r);
  const int p = mode.sine_power();
  const int q = mode.cosine_power();
  // d/dr s^p k^q = (p/2) s^{p-1} k^{q+1} -+ (q/2) s^{p+1} k^{q-1}; the sign is - for cos, + for cosh.
  const double k_sign = is_ds(model) ? -1.0 : 1.0;
  const double prefactor = std::pow(s, p) * std::pow(k, q);
  const double prefactor_dr =
      0.5 * p * std::pow(s, p - 1) * std::pow(k, q + 1) + k_sign * 0.5 * q * std::pow(s, p + 1) * std::pow(k, q - 1);
  // y = sin^2(r/2) or -sinh^2(r/2); dy/dr = +-s k.
  const double y = radial_argument(model, r);
  const double dy_dr = is_ds(model) ? s * k : -s * k;
  const cplx f = hyp2f1(mode.hyp(), y);
  const cplx df = hyp2f1_deriv(mode.hyp(), y);
  return mode.amplitude() * (prefactor_dr * f + prefactor * df * dy_dr);
}

cplx big_component(const RadialMode& mode, double t, double r) {
  return time_profile(mode.model(), mode.spectral_parameter(), t) * radial_big(mode, r);
}

cplx radial_small(const RadialMode& mode, double r, double t) {
  const Model& model = mode.model();
  const double nu = mode.qn().nu();
  const double delta = mode.qn().delta;
  const cplx big = radial_big(mode, r);
  const cplx big_dr = radial_big_derivative(mode, r);
  const double a = scale_factor(model, t);
  const cplx radial = -delta / (2.0 * model.mass) * (big_dr + delta * nu / radial_sine(model, r) * big);
  return time_profile(model, mode.spectral_parameter(), t) * radial / a;
}

PauliSample pauli_wavefunction(const RadialMode& mode, double t, double r, double theta, double phi) {
  const cplx field = big_component(mode, t, r);
  const QuantumNumbers& qn = mode.qn();
  return {field * angular_factor(qn.j, qn.m, -kHalf, phi, theta),
          field * angular_factor(qn.j, qn.m, kHalf, phi, theta)};
}

double normalize_ds(const RadialMode& mode, int quadrature_points) {
  if (!is_ds(mode.model())) throw DomainError("normalize_ds: only expanding de Sitter modes are normalizable");
  auto density = [&](double r) { return std::norm(radial_big(mode, r)); };
  const double coarse = GaussLegendreRule(quadrature_points).integrate(density, 0.0, std::numbers::pi);
  const double fine = GaussLegendreRule(2 * quadrature_points).integrate(density, 0.0, std::numbers::pi);
  if (!(fine > 0.0)) throw QuadratureError("normalize_ds: mode has zero norm");
  if (std::abs(coarse - fine) > 1e-10 * fine) {
    throw QuadratureError("normalize_ds: quadrature not converged with " + std::to_string(quadrature_points) +
                          " points");
  }
  return 1.0 / std::sqrt(fine);
}

}  // namespace pauli_ds
