#include "pauli_ds/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pauli_ds/errors.hpp"

namespace pauli_ds {
namespace {

constexpr double kIntegerTolerance = 1e-12;
constexpr double kTermTolerance = 1e-16;
constexpr int kConsecutiveSmallTerms = 25;
constexpr int kMaxTerms = 10000;

// -k if z is within tolerance of the non-positive integer -k.
std::optional<int> nonpositive_integer(cplx z) {
  if (std::abs(z.imag()) > kIntegerTolerance) return std::nullopt;
  const double r = std::round(z.real());
  if (r > 0.0 || std::abs(z.real() - r) > kIntegerTolerance) return std::nullopt;
  return static_cast<int>(-r);
}

bool is_integer(cplx z) {
  return std::abs(z.imag()) <= kIntegerTolerance &&
         std::abs(z.real() - std::round(z.real())) <= kIntegerTolerance;
}

void check_pole(const HypParams& p) {
  const auto pole = nonpositive_integer(p.c());
  if (!pole) return;
  const auto degree = p.terminating_degree();
  // (c)_k first vanishes at k = pole + 1; a polynomial of degree <= pole never reaches it.
  if (!degree || *degree > *pole) {
    throw PoleError("hyp2f1: c = " + std::to_string(-*pole) +
                    " is a non-positive integer and the series does not terminate before it");
  }
}

cplx polynomial_sum(const HypParams& p, double y) {
  using wide = std::complex<long double>;
  const int n = *p.terminating_degree();
  // Whichever upper parameter is -n drives the termination.
  const bool a_terminates = nonpositive_integer(p.a()) == n;
  const wide top = a_terminates ? wide(-n) : wide(p.b());
  const wide other = a_terminates ? wide(p.b()) : wide(p.a());
  const wide c(p.c());
  // Extended precision absorbs the cancellation between alternating terms.
  wide term = 1.0L;
  wide sum = 1.0L;
  for (int k = 0; k < n; ++k) {
    const long double kk = k;
    term *= (top + kk) * (other + kk) / ((c + kk) * (kk + 1.0L)) * static_cast<long double>(y);
    sum += term;
  }
  return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

}  // namespace

cplx pochhammer(cplx x, int k) {
  cplx result = 1.0;
  for (int i = 0; i < k; ++i) result *= x + double(i);
  return result;
}

cplx log_gamma(cplx z) {
  // Lanczos approximation, g = 7, n = 9.
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kPi = std::numbers::pi;
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + double(i));
  const cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx reciprocal_gamma(cplx z) {
  if (nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    constexpr double kPi = std::numbers::pi;
    return std::sin(kPi * z) / kPi * std::exp(log_gamma(1.0 - z));
  }
  return std::exp(-log_gamma(z));
}

HypParams::HypParams(cplx a, cplx b, cplx c) : a_(a), b_(b), c_(c) {
  const auto na = nonpositive_integer(a);
  const auto nb = nonpositive_integer(b);
  if (na && nb) {
    degree_ = std::min(*na, *nb);
  } else if (na) {
    degree_ = na;
  } else if (nb) {
    degree_ = nb;
  }
}

HypRegime HypParams::regime(double y) const {
  if (!(y < 1.0)) throw DomainError("hyp2f1: argument must satisfy y < 1");
  if (degree_) return HypRegime::polynomial;
  if (y >= 0.0 && y <= 0.5) return HypRegime::direct_series;
  if (y < 0.0) return HypRegime::pfaff_transformed;
  return HypRegime::connection;
}

cplx hyp2f1(const HypParams& p, double y) {
  const HypRegime regime = p.regime(y);
  check_pole(p);
  switch (regime) {
    case HypRegime::polynomial:
      return polynomial_sum(p, y);
    case HypRegime::direct_series:
      return hyp2f1_route::series(p, y);
    case HypRegime::pfaff_transformed:
      return hyp2f1_route::pfaff(p, y);
    case HypRegime::connection:
      return hyp2f1_route::connection(p, y);
  }
  return {};
}

cplx hyp2f1_deriv(const HypParams& p, double y) {
  p.regime(y);
  check_pole(p);
  if (p.terminating_degree() == 0) return 0.0;
  return p.a() * p.b() / p.c() * hyp2f1(p.raised(), y);
}

namespace hyp2f1_route {

cplx series(const HypParams& p, double y) {
  if (!(std::abs(y) < 1.0)) throw DomainError("hyp2f1 series: requires |y| < 1");
  check_pole(p);
  if (p.terminating_degree()) return polynomial_sum(p, y);
  cplx term = 1.0;
  cplx sum = 1.0;
  int small = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (p.a() + double(k)) * (p.b() + double(k)) / ((p.c() + double(k)) * double(k + 1)) * y;
    sum += term;
    small = std::abs(term) < kTermTolerance * std::abs(sum) ? small + 1 : 0;
    if (small >= kConsecutiveSmallTerms) return sum;
  }
  throw ConvergenceError("hyp2f1 series: no convergence within 10000 terms");
}

cplx pfaff(const HypParams& p, double y) {
  if (!(y < 1.0)) throw DomainError("hyp2f1 pfaff: requires y < 1");
  const double w = y / (y - 1.0);
  const HypParams transformed(p.a(), p.c() - p.b(), p.c());
  return std::pow(cplx(1.0 - y), -p.a()) * hyp2f1(transformed, w);
}

cplx connection(const HypParams& p, double y) {
  if (!(y > 0.0 && y < 1.0)) throw DomainError("hyp2f1 connection: requires 0 < y < 1");
  const cplx a = p.a(), b = p.b(), c = p.c();
  const cplx s = c - a - b;
  if (is_integer(s)) {
    throw NotImplementedError("hyp2f1: integer c - a - b near y = 1 (logarithmic case) is not supported");
  }
  check_pole(p);
  const double x = 1.0 - y;
  const cplx gamma_c = std::exp(log_gamma(c));
  const cplx first = gamma_c * std::exp(log_gamma(s)) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  const cplx second = gamma_c * std::exp(log_gamma(-s)) * reciprocal_gamma(a) * reciprocal_gamma(b);
  cplx result = 0.0;
  if (first != 0.0) result += first * hyp2f1(HypParams(a, b, 1.0 - s), x);
  if (second != 0.0) result += second * std::pow(cplx(x), s) * hyp2f1(HypParams(c - a, c - b, 1.0 + s), x);
  return result;
}

}  // namespace hyp2f1_route
}  // namespace pauli_ds
