#include <doctest.h>

#include <cmath>
#include <random>

#include "pauli_ds/angular.hpp"
#include "pauli_ds/errors.hpp"

using namespace pauli_ds;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

std::vector<HalfInt> projections(HalfInt j) {
  std::vector<HalfInt> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(h(t));
  return out;
}

}  // namespace

TEST_CASE("small-d identity rotation") {
  for (int tj = 1; tj <= 7; tj += 2) {
    for (HalfInt mp : projections(h(tj))) {
      for (HalfInt m : projections(h(tj))) CHECK(wigner_small_d(h(tj), mp, m, 0.0) == (mp == m ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("small-d closed forms for j = 1/2 and 3/2") {
  for (double b : {0.1, 0.7, M_PI / 2, 2.3, 3.0}) {
    const double c = std::cos(b / 2), s = std::sin(b / 2), cb = std::cos(b);
    CHECK(wigner_small_d(h(1), h(1), h(1), b) == doctest::Approx(c).epsilon(1e-14));
    CHECK(wigner_small_d(h(1), h(1), h(-1), b) == doctest::Approx(-s).epsilon(1e-14));
    CHECK(wigner_small_d(h(1), h(-1), h(1), b) == doctest::Approx(s).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(3), h(3), b) == doctest::Approx(c * c * c).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(3), h(1), b) == doctest::Approx(-std::sqrt(3.0) * (1 + cb) / 2 * s).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(3), h(-1), b) == doctest::Approx(std::sqrt(3.0) * (1 - cb) / 2 * c).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(3), h(-3), b) == doctest::Approx(-(1 - cb) / 2 * s).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(1), h(1), b) == doctest::Approx((3 * cb - 1) / 2 * c).epsilon(1e-14));
    CHECK(wigner_small_d(h(3), h(1), h(-1), b) == doctest::Approx(-(3 * cb + 1) / 2 * s).epsilon(1e-14));
  }
  CHECK(wigner_small_d(h(1), h(1), h(1), M_PI / 2) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("small-d unitarity and symmetry") {
  for (int tj = 1; tj <= 9; tj += 2) {
    const HalfInt j = h(tj);
    for (double theta : {0.3, 0.7, 1.9, 2.8}) {
      for (HalfInt a : projections(j)) {
        for (HalfInt b : projections(j)) {
          double dot = 0.0;
          for (HalfInt m : projections(j)) dot += wigner_small_d(j, a, m, theta) * wigner_small_d(j, b, m, theta);
          CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
          const double d = wigner_small_d(j, a, b, theta);
          const double sign = ((a - b).twice() / 2) % 2 == 0 ? 1.0 : -1.0;
          CHECK(std::abs(d - sign * wigner_small_d(j, b, a, theta)) < 1e-12);
          CHECK(std::abs(d - wigner_small_d(j, -b, -a, theta)) < 1e-12);
        }
      }
    }
  }
  double row = 0.0;
  for (HalfInt m : projections(h(3))) row += std::pow(wigner_small_d(h(3), h(1), m, 0.7), 2);
  CHECK(row == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("big-D phase") {
  CHECK(wigner_D(h(3), h(1), h(-1), 0.0, 1.2).real() == doctest::Approx(wigner_small_d(h(3), h(1), h(-1), 1.2)));
  const cplx want = cplx(0, 1) * wigner_small_d(h(1), h(-1), h(1), M_PI / 2);
  CHECK(std::abs(wigner_D(h(1), h(-1), h(1), M_PI, M_PI / 2) - want) < 1e-15);
  for (double phi : {0.4, 2.0, -3.0})
    CHECK(std::abs(wigner_D(h(5), h(3), h(-1), phi, 0.9)) ==
          doctest::Approx(std::abs(wigner_small_d(h(5), h(3), h(-1), 0.9))).epsilon(1e-14));
  CHECK(angular_factor(h(1), h(1), h(3), 0.2, 0.3) == cplx(0.0));
}

TEST_CASE("recurrence coefficients") {
  auto c = recurrence_coefficients(h(1));
  CHECK(c.a == 0.5);
  CHECK(c.b == 0.0);
  c = recurrence_coefficients(h(3));
  CHECK(c.a == 1.0);
  CHECK(c.b == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  c = recurrence_coefficients(h(5));
  CHECK(c.a == 1.5);
  CHECK(c.b == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("recurrence residual") {
  CHECK(recurrence_residual(h(1), h(1), 1.0) < 1e-8);
  CHECK(recurrence_residual(h(3), h(-1), 0.3) < 1e-8);
  for (int tj = 1; tj <= 9; tj += 2)
    for (HalfInt m : projections(h(tj)))
      for (double theta : {0.2, 0.9, 1.6, 2.5, 3.0}) CHECK(recurrence_residual(h(tj), m, theta) < 1e-7);
  auto broken = recurrence_coefficients(h(3));
  broken.a += 0.1;
  CHECK(recurrence_residual(h(3), h(1), 1.0, broken) > 1e-3);
  CHECK_THROWS_AS(recurrence_residual(h(1), h(1), 0.0), DomainError);
}

TEST_CASE("sigma action") {
  const Spinor4 generic{cplx(0.3, 1.0), cplx(-1.2, 0.1), cplx(0.5, 0.5), cplx(2.0, -0.7)};
  CHECK(sigma_action_residual({h(1), h(1), 0, 1}, generic, 1.1, 0.4) < 1e-7);
  CHECK(sigma_action_residual({h(5), h(1), 0, 1}, {1.0, 0.0, 0.0, 0.0}, 0.8, 2.0) < 1e-7);
  for (int tj = 1; tj <= 7; tj += 2)
    for (HalfInt m : projections(h(tj))) CHECK(sigma_action_residual({h(tj), m, 0, 1}, generic, 1.3, -0.6) < 1e-7);
  CHECK(sigma_action_residual({h(1), h(1), 0, 1}, generic, 1.1, 0.4, 1.0) > 1e-2);
}

TEST_CASE("parity eigenvalue on random spinors") {
  CHECK(parity_check({h(1), h(1), 0, 1}, 1.0, cplx(0, 0.5), 0.9, 1.2) < 1e-12);
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> amp(-2.0, 2.0), theta(0.05, M_PI - 0.05), phi(-M_PI, M_PI);
  for (int s = 0; s < 200; ++s) {
    const int tj = 1 + 2 * (s % 4);
    const int delta = s % 2 ? 1 : -1;
    const QuantumNumbers qn{h(tj), projections(h(tj))[s % (tj + 1)], 0, delta};
    const cplx f1(amp(rng), amp(rng)), f2(amp(rng), amp(rng));
    CHECK(parity_check(qn, f1, f2, theta(rng), phi(rng)) < 1e-12);
  }
  const QuantumNumbers qn{h(3), h(1), 0, -1};
  const double th = 0.9, ph = 1.2;
  const Spinor4 psi = assemble_spinor(qn, fixed_parity_amplitudes(-1, 1.0, cplx(0, 0.5)), th, ph);
  double scale = 0.0;
  for (const cplx& c : psi) scale = std::max(scale, std::abs(c));
  const double wrong = parity_residual(qn, 1.0, cplx(0, 0.5), th, ph, -parity_eigenvalue(h(3), -1));
  CHECK(wrong == doctest::Approx(2 * scale).epsilon(1e-12));
}
