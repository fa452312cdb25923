#include "pauli_ds/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pauli_ds/errors.hpp"

namespace pauli_ds {
namespace {

constexpr double kPi = std::numbers::pi;

void require_time(const Model& model, double t) {
  if (!model.time_in_domain(t)) {
    throw DomainError("time t = " + std::to_string(t) + " outside the " + std::string(model.name()) +
                      " time domain");
  }
}

}  // namespace

Model Model::expanding_ds(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return {ModelKind::ExpandingDS, mass};
}

Model Model::oscillating_ads(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  return {ModelKind::OscillatingAdS, mass};
}

std::string_view Model::name() const { return kind == ModelKind::ExpandingDS ? "ds" : "ads"; }

bool Model::time_in_domain(double t) const {
  if (std::isnan(t)) return false;
  if (kind == ModelKind::ExpandingDS) return true;
  return std::abs(t) < kPi / 2;
}

bool Model::radius_in_domain(double r) const {
  if (kind == ModelKind::ExpandingDS) return r > 0.0 && r < kPi;
  return r > 0.0 && std::isfinite(r);
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "ds") return ModelKind::ExpandingDS;
  if (name == "ads") return ModelKind::OscillatingAdS;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected ds or ads)");
}

double scale_factor(const Model& model, double t) {
  require_time(model, t);
  return model.kind == ModelKind::ExpandingDS ? std::cosh(t) : std::cos(t);
}

double time_phase_argument(const Model& model, double t) {
  require_time(model, t);
  return model.kind == ModelKind::ExpandingDS ? std::tanh(t) : std::tan(t);
}

double time_phase_rate(const Model& model, double t) {
  const double a = scale_factor(model, t);
  return 1.0 / (a * a);
}

cplx time_profile(const Model& model, double spectral_parameter, double t) {
  return std::polar(1.0, -spectral_parameter * time_phase_argument(model, t));
}

double radial_argument(const Model& model, double r) {
  if (model.kind == ModelKind::ExpandingDS) {
    if (!(r >= 0.0 && r <= kPi)) throw DomainError("radial_argument: r outside [0, pi]");
    const double s = std::sin(0.5 * r);
    return s * s;
  }
  if (!(r >= 0.0) || std::isinf(r)) throw DomainError("radial_argument: r outside [0, inf)");
  const double s = std::sinh(0.5 * r);
  return -s * s;
}

double radial_sine(const Model& model, double r) {
  return model.kind == ModelKind::ExpandingDS ? std::sin(r) : std::sinh(r);
}

double radial_cosine(const Model& model, double r) {
  return model.kind == ModelKind::ExpandingDS ? std::cos(r) : std::cosh(r);
}

double effective_potential(const Model& model, ParitySector sector, HalfInt j, double r) {
  return effective_potential(model, sector, j.value() + 0.5, r);
}

double effective_potential(const Model& model, ParitySector sector, double nu, double r) {
  if (r == 0.0 || (model.kind == ModelKind::ExpandingDS && r == kPi)) {
    throw SingularityError("effective_potential: singular point r = " + std::to_string(r));
  }
  if (!model.radius_in_domain(r)) throw DomainError("effective_potential: r outside the domain");
  const double s = radial_sine(model, r);
  return (nu * nu + sector.sign() * nu * radial_cosine(model, r)) / (s * s);
}

}  // namespace pauli_ds
