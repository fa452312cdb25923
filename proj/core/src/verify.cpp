#include "pauli_ds/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "pauli_ds/errors.hpp"
#include "pauli_ds/quadrature.hpp"
#include "pauli_ds/stencil.hpp"

namespace pauli_ds {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::array<std::pair<EquationId, std::string_view>, 8> kEquationNames = {{
    {EquationId::RelativisticFirstOrder, "RelativisticFirstOrder"},
    {EquationId::ReducedSystem, "ReducedSystem"},
    {EquationId::PauliPDE, "PauliPDE"},
    {EquationId::RadialODE, "RadialODE"},
    {EquationId::AdSSystem, "AdSSystem"},
    {EquationId::AdSReducedSystem, "AdSReducedSystem"},
    {EquationId::AdSPDE, "AdSPDE"},
    {EquationId::AdSRadialODE, "AdSRadialODE"},
}};

bool is_ds(const Model& model) { return model.kind == ModelKind::ExpandingDS; }

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = 0.5 * (lo + hi);
    return out;
  }
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  return out;
}

// tau(t) and tau'(t) of a time phase, possibly the other model's (fault injection).
double phase_argument(ModelKind kind, double t) {
  return kind == ModelKind::ExpandingDS ? std::tanh(t) : std::tan(t);
}

double phase_rate(ModelKind kind, double t) {
  const double a = kind == ModelKind::ExpandingDS ? std::cosh(t) : std::cos(t);
  return 1.0 / (a * a);
}

ModelKind other(ModelKind kind) {
  return kind == ModelKind::ExpandingDS ? ModelKind::OscillatingAdS : ModelKind::ExpandingDS;
}

// The (t, r) fields of a mode, with any requested corruption applied.
class Candidate {
 public:
  Candidate(const RadialMode& mode, const FaultInjection& fault)
      : mode_(mode),
        phase_kind_(fault.swap_time_profile ? other(mode.model().kind) : mode.model().kind),
        spectral_parameter_(mode.spectral_parameter() * (1.0 + fault.e_relative_shift)),
        zero_small_(fault.zero_small_component) {}

  const Model& model() const { return mode_.model(); }
  double mass() const { return mode_.model().mass; }
  double nu() const { return mode_.qn().nu(); }
  int delta() const { return mode_.qn().delta; }
  double spectral_parameter() const { return spectral_parameter_; }

  cplx phase(double t) const { return std::polar(1.0, -spectral_parameter_ * phase_argument(phase_kind_, t)); }
  // (d_t phase) / phase
  cplx phase_log_rate(double t) const { return {0.0, -spectral_parameter_ * phase_rate(phase_kind_, t)}; }

  cplx big_radial(double r) const { return radial_big(mode_, r); }
  cplx big_radial_dr(double r) const {
    return stencil::first_derivative([&](double x) { return radial_big(mode_, x); }, r, kRadialStep);
  }
  cplx big_radial_drr(double r) const {
    return stencil::second_derivative([&](double x) { return radial_big(mode_, x); }, r, kRadialStep);
  }

  // Small component without its time factor phase(t)/a(t).
  cplx small_radial(double r) const {
    if (zero_small_) return 0.0;
    const double s = radial_sine(model(), r);
    return -delta() / (2.0 * mass()) * (radial_big_derivative(mode_, r) + delta() * nu() / s * radial_big(mode_, r));
  }
  cplx small_radial_dr(double r) const {
    return stencil::first_derivative([&](double x) { return small_radial(x); }, r, kRadialStep);
  }

  double scale_factor_at(double t) const { return scale_factor(model(), t); }
  // a'(t)/a(t): tanh t for cosh t, -tan t for cos t.
  double scale_log_rate(double t) const { return is_ds(model()) ? std::tanh(t) : -std::tan(t); }

 private:
  const RadialMode& mode_;
  ModelKind phase_kind_;
  double spectral_parameter_;
  bool zero_small_;
};

// Values of both first-order fields and their derivatives at one point.
struct FirstOrderFields {
  cplx f, f_dr, f_dt;  // upper radial function of the reduced pair
  cplx g, g_dr, g_dt;  // lower radial function
};

FirstOrderFields first_order_fields(const Candidate& c, double t, double r) {
  const cplx phase = c.phase(t);
  const double a = c.scale_factor_at(t);
  const cplx big = phase * c.big_radial(r);
  const cplx big_dr = phase * c.big_radial_dr(r);
  const cplx big_dt = c.phase_log_rate(t) * big;
  const cplx small = phase * c.small_radial(r) / a;
  const cplx small_dr = phase * c.small_radial_dr(r) / a;
  const cplx small_dt = (c.phase_log_rate(t) - c.scale_log_rate(t)) * small;
  if (c.delta() > 0) return {big, big_dr, big_dt, small, small_dr, small_dt};
  return {small, small_dr, small_dt, big, big_dr, big_dt};
}

class Accumulator {
 public:
  void add(double value) {
    max_ = std::max(max_, value);
    sum_sq_ += value * value;
    ++count_;
  }
  double max() const { return max_; }
  double rms() const { return count_ == 0 ? 0.0 : std::sqrt(sum_sq_ / count_); }

 private:
  double max_ = 0.0;
  double sum_sq_ = 0.0;
  long count_ = 0;
};

double big_scale(const RadialMode& mode, const Grid& grid) {
  double scale = 0.0;
  for (double r : grid.r_points) scale = std::max(scale, std::abs(radial_big(mode, r)));
  if (!(scale > 0.0)) throw GridError("residual: the mode vanishes on the whole grid");
  return scale;
}

ResidualReport make_report(EquationId id, const RadialMode& mode, const Grid& grid, const Accumulator& acc,
                           double scale) {
  return {id, acc.max() / scale, acc.rms() / scale, scale, summarize(grid), label_of(mode)};
}

template <class PointResidual>
ResidualReport sweep(EquationId id, const RadialMode& mode, const Grid& grid, PointResidual&& residual) {
  grid.validate(mode.model());
  const double scale = big_scale(mode, grid);
  Accumulator acc;
  for (double t : grid.t_points) {
    for (double r : grid.r_points) acc.add(residual(t, r));
  }
  return make_report(id, mode, grid, acc, scale);
}

}  // namespace

std::string_view to_string(EquationId id) {
  for (const auto& [value, name] : kEquationNames) {
    if (value == id) return name;
  }
  return "unknown";
}

EquationId parse_equation_id(std::string_view name) {
  for (const auto& [value, known] : kEquationNames) {
    if (known == name) return value;
  }
  throw std::invalid_argument("unknown equation id '" + std::string(name) + "'");
}

Grid Grid::uniform(const Model& model, int nr, int nt, double margin, double ads_r_max) {
  if (nr < 1 || nt < 1) throw GridError("grid: need at least one r and one t point");
  if (!(margin > 0.0)) throw GridError("grid: margin must be positive");
  Grid grid;
  grid.margin = margin;
  if (is_ds(model)) {
    if (!(margin < kPi / 2)) throw GridError("grid: margin too large for (0, pi)");
    grid.r_points = linspace(margin, kPi - margin, nr);
    grid.t_points = linspace(-2.0, 2.0, nt);
  } else {
    if (!(ads_r_max > margin)) throw GridError("grid: r_max must exceed the margin");
    const double t_max = std::min(1.2, kPi / 2 - margin);
    if (!(t_max > 0.0)) throw GridError("grid: margin too large for (-pi/2, pi/2)");
    grid.r_points = linspace(margin, ads_r_max, nr);
    grid.t_points = linspace(-t_max, t_max, nt);
  }
  return grid;
}

void Grid::validate(const Model& model) const {
  if (r_points.empty() || t_points.empty()) throw GridError("grid: empty");
  for (double r : r_points) {
    if (!model.radius_in_domain(r - 2 * kRadialStep) || !model.radius_in_domain(r + 2 * kRadialStep)) {
      throw GridError("grid: radial stencil at r = " + std::to_string(r) + " leaves the domain");
    }
  }
  for (double t : t_points) {
    if (!model.time_in_domain(t)) throw GridError("grid: t = " + std::to_string(t) + " outside the time domain");
  }
}

GridSummary summarize(const Grid& grid) {
  GridSummary s;
  s.r_count = static_cast<int>(grid.r_points.size());
  s.t_count = static_cast<int>(grid.t_points.size());
  if (!grid.r_points.empty()) {
    s.r_min = *std::min_element(grid.r_points.begin(), grid.r_points.end());
    s.r_max = *std::max_element(grid.r_points.begin(), grid.r_points.end());
  }
  if (!grid.t_points.empty()) {
    s.t_min = *std::min_element(grid.t_points.begin(), grid.t_points.end());
    s.t_max = *std::max_element(grid.t_points.begin(), grid.t_points.end());
  }
  s.margin = grid.margin;
  return s;
}

ModeLabel label_of(const RadialMode& mode) {
  return {mode.model().kind, mode.qn(), mode.spectral_parameter(), mode.model().mass};
}

ResidualReport radial_ode_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault) {
  const Candidate c(mode, fault);
  const EquationId id = is_ds(mode.model()) ? EquationId::RadialODE : EquationId::AdSRadialODE;
  const ParitySector sector{mode.qn().delta};
  const double two_m_e = 2.0 * c.mass() * c.spectral_parameter();
  return sweep(id, mode, grid, [&](double, double r) {
    const cplx f = c.big_radial(r);
    const double v = effective_potential(mode.model(), sector, c.nu(), r);
    return std::abs(c.big_radial_drr(r) - v * f + two_m_e * f);
  });
}

ResidualReport pauli_pde_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault) {
  const Candidate c(mode, fault);
  const EquationId id = is_ds(mode.model()) ? EquationId::PauliPDE : EquationId::AdSPDE;
  const ParitySector sector{mode.qn().delta};
  const cplx i{0.0, 1.0};
  return sweep(id, mode, grid, [&](double t, double r) {
    const cplx phase = c.phase(t);
    const cplx field = phase * c.big_radial(r);
    const double v = effective_potential(mode.model(), sector, c.nu(), r);
    const double a = c.scale_factor_at(t);
    const cplx lhs = i * c.phase_log_rate(t) * field;
    const cplx rhs = -1.0 / (2.0 * c.mass() * a * a) * phase * (c.big_radial_drr(r) - v * c.big_radial(r));
    return std::abs(lhs - rhs);
  });
}

ResidualReport first_order_residual(const RadialMode& mode, const Grid& grid, const FaultInjection& fault) {
  const Candidate c(mode, fault);
  const EquationId id = is_ds(mode.model()) ? EquationId::ReducedSystem : EquationId::AdSReducedSystem;
  const cplx i{0.0, 1.0};
  return sweep(id, mode, grid, [&](double t, double r) {
    const FirstOrderFields x = first_order_fields(c, t, r);
    const double a = c.scale_factor_at(t);
    const double coupling = c.nu() / radial_sine(c.model(), r);
    const double two_m = 2.0 * c.mass();
    cplx upper, lower;
    if (c.delta() > 0) {
      upper = (x.f_dr + coupling * x.f) / a + two_m * x.g;
      lower = (x.g_dr - coupling * x.g) / a - i * x.f_dt;
    } else {
      upper = (x.f_dr + coupling * x.f) / a + i * x.g_dt;
      lower = (x.g_dr - coupling * x.g) / a - two_m * x.f;
    }
    return std::max(std::abs(upper), std::abs(lower));
  });
}

ResidualReport relativistic_residual(const RadialMode& mode, const Grid& grid) {
  const Candidate c(mode, {});
  const EquationId id = is_ds(mode.model()) ? EquationId::RelativisticFirstOrder : EquationId::AdSSystem;
  const cplx i{0.0, 1.0};
  return sweep(id, mode, grid, [&](double t, double r) {
    const FirstOrderFields x = first_order_fields(c, t, r);
    const double a = c.scale_factor_at(t);
    const double coupling = c.nu() / radial_sine(c.model(), r);
    const double m = c.mass();
    const double dm = c.delta() * m;
    // i d_t acting on exp(-iMt) h gives exp(-iMt) (M h + i d_t h).
    const cplx upper = (x.f_dr + coupling * x.f) / a + (m * x.g + i * x.g_dt) + dm * x.g;
    const cplx lower = (x.g_dr - coupling * x.g) / a - ((m * x.f + i * x.f_dt) - dm * x.f);
    return std::max(std::abs(upper), std::abs(lower));
  });
}

RadialMode make_mode(const ModeFamilySpec& family, double mass) {
  if (family.model == ModelKind::ExpandingDS) return RadialMode::expanding_ds(Model::expanding_ds(mass), family.qn);
  return RadialMode::oscillating_ads(Model::oscillating_ads(mass), family.qn, family.two_m_e);
}

std::vector<ScalingPoint> relativistic_limit_scaling(const ModeFamilySpec& family, std::span<const double> masses,
                                                     const Grid& grid) {
  if (masses.size() < 2) throw std::invalid_argument("relativistic_limit_scaling: need at least two masses");
  for (std::size_t k = 1; k < masses.size(); ++k) {
    if (!(masses[k] > masses[k - 1])) {
      throw std::invalid_argument("relativistic_limit_scaling: masses must be strictly increasing");
    }
  }
  std::vector<ScalingPoint> out;
  out.reserve(masses.size());
  for (double mass : masses) {
    out.push_back({mass, relativistic_residual(make_mode(family, mass), grid).max_abs});
  }
  return out;
}

std::vector<std::vector<double>> orthogonality_gram(HalfInt j, int delta, int n_max, int quadrature_points) {
  if (n_max < 0) throw std::invalid_argument("orthogonality_gram: n_max must be non-negative");
  const Model model = Model::expanding_ds(1.0);
  std::vector<RadialMode> modes;
  for (int n = 0; n <= n_max; ++n) modes.push_back(RadialMode::expanding_ds(model, {j, kHalf, n, delta}));

  const GaussLegendreRule rule(quadrature_points);
  const GaussLegendreRule check(2 * quadrature_points);
  std::vector<std::vector<double>> gram(n_max + 1, std::vector<double>(n_max + 1));
  for (int a = 0; a <= n_max; ++a) {
    for (int b = a; b <= n_max; ++b) {
      auto product = [&](double r) { return (radial_big(modes[a], r) * std::conj(radial_big(modes[b], r))).real(); };
      const double value = rule.integrate(product, 0.0, kPi);
      if (std::abs(value - check.integrate(product, 0.0, kPi)) > 1e-10) {
        throw QuadratureError("orthogonality_gram: quadrature not converged");
      }
      gram[a][b] = gram[b][a] = value;
    }
  }
  return gram;
}

double density_stationarity(const RadialMode& mode, const Grid& grid, int samples, unsigned seed) {
  const GridSummary s = summarize(grid);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> t_dist(s.t_min, s.t_max);
  std::uniform_real_distribution<double> r_dist(s.r_min, s.r_max);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t1 = t_dist(rng);
    const double t2 = t_dist(rng);
    const double r = r_dist(rng);
    const double theta = theta_dist(rng);
    const double phi = phi_dist(rng);
    const double d1 = pauli_wavefunction(mode, t1, r, theta, phi).density();
    const double d2 = pauli_wavefunction(mode, t2, r, theta, phi).density();
    worst = std::max(worst, std::abs(d1 - d2));
  }
  return worst;
}

}  // namespace pauli_ds
