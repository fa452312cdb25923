#include "pauli_ds/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pauli_ds/errors.hpp"
#include "pauli_ds/stencil.hpp"

namespace pauli_ds {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngularStep = 1e-4;

using Mat4 = std::array<std::array<cplx, 4>, 4>;

double factorial(int n) {
  // Exact in double through 22!.
  static const auto table = [] {
    std::array<double, 23> t{};
    t[0] = 1.0;
    for (int i = 1; i < 23; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < 23) return table[n];
  return std::tgamma(n + 1.0);
}

void check_projection(HalfInt j, HalfInt mu) {
  if (j.twice() < 0 || std::abs(mu.twice()) > j.twice() || !(j - mu).is_integer()) {
    throw DomainError("wigner: invalid projection " + mu.str() + " for j = " + j.str());
  }
}

Mat4 multiply(const Mat4& x, const Mat4& y) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) out[i][l] += x[i][k] * y[k][l];
  return out;
}

Spinor4 mat_vec(const Mat4& m, const Spinor4& v) {
  Spinor4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out[i] += m[i][k] * v[k];
  return out;
}

// gamma^k = [[0, -s_k], [s_k, 0]] for a Pauli matrix s_k.
Mat4 off_diagonal_gamma(const std::array<std::array<cplx, 2>, 2>& s) {
  Mat4 g{};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      g[i][k + 2] = -s[i][k];
      g[i + 2][k] = s[i][k];
    }
  }
  return g;
}

struct GammaMatrices {
  Mat4 gamma1, gamma2, sigma12;
};

const GammaMatrices& gammas() {
  static const GammaMatrices g = [] {
    const cplx i{0.0, 1.0};
    GammaMatrices out;
    out.gamma1 = off_diagonal_gamma({{{0.0, 1.0}, {1.0, 0.0}}});
    out.gamma2 = off_diagonal_gamma({{{0.0, -i}, {i, 0.0}}});
    const Mat4 g12 = multiply(out.gamma1, out.gamma2);
    const Mat4 g21 = multiply(out.gamma2, out.gamma1);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out.sigma12[r][c] = 0.25 * (g12[r][c] - g21[r][c]);
    return out;
  }();
  return g;
}

void check_interior(double theta, const char* what) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError(std::string(what) + ": theta must lie strictly inside (0, pi)");
  }
}

double max_deviation(const Spinor4& x, const Spinor4& y) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(x[k] - y[k]));
  return worst;
}

}  // namespace

double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta) {
  check_projection(j, mp);
  check_projection(j, m);
  const int jpm = (j + m).twice() / 2;
  const int jmm = (j - m).twice() / 2;
  const int jpmp = (j + mp).twice() / 2;
  const int jmmp = (j - mp).twice() / 2;
  const int dm = (mp - m).twice() / 2;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);

  double sum = 0.0;
  for (int k = std::max(0, -dm); k <= std::min(jpm, jmmp); ++k) {
    const double denom = factorial(jpm - k) * factorial(k) * factorial(dm + k) * factorial(jmmp - k);
    const double sign = (dm + k) % 2 == 0 ? 1.0 : -1.0;
    sum += sign / denom * std::pow(c, jpm + jmmp - 2 * k) * std::pow(s, dm + 2 * k);
  }
  return std::sqrt(factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm)) * sum;
}

cplx wigner_D(HalfInt j, HalfInt mp, HalfInt m, double phi, double theta) {
  return std::polar(1.0, -mp.value() * phi) * wigner_small_d(j, mp, m, theta);
}

cplx angular_factor(HalfInt j, HalfInt m, HalfInt sigma, double phi, double theta) {
  if (std::abs(sigma.twice()) > j.twice()) return 0.0;
  return wigner_D(j, -m, sigma, phi, theta);
}

RecurrenceCoefficients recurrence_coefficients(HalfInt j) {
  const double jv = j.value();
  return {0.5 * (jv + 0.5), 0.5 * std::sqrt(std::max(0.0, (jv - 0.5) * (jv + 1.5)))};
}

double recurrence_residual(HalfInt j, HalfInt m, double theta) {
  return recurrence_residual(j, m, theta, recurrence_coefficients(j));
}

double recurrence_residual(HalfInt j, HalfInt m, double theta, const RecurrenceCoefficients& coeffs) {
  check_interior(theta, "recurrence_residual");
  constexpr double phi = 0.37;
  const HalfInt half = kHalf;
  const HalfInt three_halves = HalfInt::from_twice(3);
  auto factor = [&](HalfInt sigma) {
    return [=](double th) { return angular_factor(j, m, sigma, phi, th); };
  };
  const cplx d_minus = factor(-half)(theta);
  const cplx d_plus = factor(half)(theta);
  const cplx d_minus3 = factor(-three_halves)(theta);
  const cplx d_plus3 = factor(three_halves)(theta);
  const double mv = m.value();
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double a = coeffs.a;
  const double b = coeffs.b;

  const cplx r1 = stencil::first_derivative(factor(half), theta, kAngularStep) - (a * d_minus - b * d_plus3);
  const cplx r2 = (-mv - 0.5 * ct) / st * d_plus - (-a * d_minus - b * d_plus3);
  const cplx r3 = stencil::first_derivative(factor(-half), theta, kAngularStep) - (b * d_minus3 - a * d_plus);
  const cplx r4 = (-mv + 0.5 * ct) / st * d_minus - (-b * d_minus3 - a * d_plus);
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

Spinor4 assemble_spinor(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi) {
  const cplx d_minus = angular_factor(qn.j, qn.m, -kHalf, phi, theta);
  const cplx d_plus = angular_factor(qn.j, qn.m, kHalf, phi, theta);
  return {f[0] * d_minus, f[1] * d_plus, f[2] * d_minus, f[3] * d_plus};
}

Spinor4 fixed_parity_amplitudes(int delta, cplx f1, cplx f2) {
  const double d = delta;
  return {f1, f2, d * f2, d * f1};
}

Spinor4 apply_sigma_operator(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi) {
  check_interior(theta, "apply_sigma_operator");
  const auto& g = gammas();
  const cplx i{0.0, 1.0};
  const auto psi = assemble_spinor(qn, f, theta, phi);

  Spinor4 d_theta{}, d_phi{};
  for (int k = 0; k < 4; ++k) {
    d_theta[k] = stencil::first_derivative(
        [&](double th) { return assemble_spinor(qn, f, th, phi)[k]; }, theta, kAngularStep);
    d_phi[k] = stencil::first_derivative(
        [&](double ph) { return assemble_spinor(qn, f, theta, ph)[k]; }, phi, kAngularStep);
  }
  const Spinor4 spin = mat_vec(g.sigma12, psi);
  Spinor4 inner{};
  for (int k = 0; k < 4; ++k) {
    inner[k] = (i * d_phi[k] + i * std::cos(theta) * spin[k]) / std::sin(theta);
  }
  const Spinor4 first = mat_vec(g.gamma1, d_theta);
  const Spinor4 second = mat_vec(g.gamma2, inner);
  Spinor4 out{};
  for (int k = 0; k < 4; ++k) out[k] = i * first[k] + second[k];
  return out;
}

double sigma_action_residual(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi,
                             double nu_shift) {
  const Spinor4 actual = apply_sigma_operator(qn, f, theta, phi);
  const cplx d_minus = angular_factor(qn.j, qn.m, -kHalf, phi, theta);
  const cplx d_plus = angular_factor(qn.j, qn.m, kHalf, phi, theta);
  const cplx inu{0.0, qn.nu() + nu_shift};
  const Spinor4 expected = {-inu * f[3] * d_minus, inu * f[2] * d_plus, inu * f[1] * d_minus,
                            -inu * f[0] * d_plus};
  return max_deviation(actual, expected);
}

cplx parity_eigenvalue(HalfInt j, int delta) {
  // (-1)^{j+1} = exp(i pi (j + 1)).
  return double(delta) * std::polar(1.0, kPi * (j.value() + 1.0));
}

Spinor4 apply_parity(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi) {
  const Spinor4 reflected = assemble_spinor(qn, f, kPi - theta, phi + kPi);
  return {-reflected[3], -reflected[2], -reflected[1], -reflected[0]};
}

double parity_residual(const QuantumNumbers& qn, cplx f1, cplx f2, double theta, double phi,
                       cplx eigenvalue) {
  const Spinor4 amplitudes = fixed_parity_amplitudes(qn.delta, f1, f2);
  const Spinor4 psi = assemble_spinor(qn, amplitudes, theta, phi);
  const Spinor4 image = apply_parity(qn, amplitudes, theta, phi);
  Spinor4 expected{};
  for (int k = 0; k < 4; ++k) expected[k] = eigenvalue * psi[k];
  return max_deviation(image, expected);
}

double parity_check(const QuantumNumbers& qn, cplx f1, cplx f2, double theta, double phi) {
  return parity_residual(qn, f1, f2, theta, phi, parity_eigenvalue(qn.j, qn.delta));
}

}  // namespace pauli_ds
