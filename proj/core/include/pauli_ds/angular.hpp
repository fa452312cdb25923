#ifndef PAULI_DS_ANGULAR_HPP
#define PAULI_DS_ANGULAR_HPP

#include <array>
#include <complex>

#include "pauli_ds/half_int.hpp"

namespace pauli_ds {

using cplx = std::complex<double>;

/// Four complex components, e.g. (f1 D_{-1/2}, f2 D_{+1/2}, f3 D_{-1/2}, f4 D_{+1/2}).
using Spinor4 = std::array<cplx, 4>;

/// Wigner small-d function d^j_{mp,m}(theta), Varshalovich convention
/// (d^{1/2}_{1/2,1/2} = cos(theta/2), d^{1/2}_{1/2,-1/2} = -sin(theta/2)).
/// Throws DomainError unless |mp|, |m| <= j and j - mp, j - m are integers.
double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double theta);

/// D^j_{mp,m}(phi, theta, 0) = exp(-i mp phi) d^j_{mp,m}(theta).
cplx wigner_D(HalfInt j, HalfInt mp, HalfInt m, double phi, double theta);

/// D^j_{-m,sigma}(phi, theta, 0), the angular factor used throughout; zero when |sigma| > j.
cplx angular_factor(HalfInt j, HalfInt m, HalfInt sigma, double phi, double theta);

struct RecurrenceCoefficients {
  double a = 0.0;
  double b = 0.0;
};

/// a = (j + 1/2)/2, b = sqrt((j - 1/2)(j + 3/2))/2.
RecurrenceCoefficients recurrence_coefficients(HalfInt j);

/// Largest violation of the four first-order recurrences linking D_{+-1/2} to
/// D_{-+1/2} and D_{+-3/2}:
///   d_theta D_{+1/2}                          =  a D_{-1/2} - b D_{+3/2}
///   (-m - cos(theta)/2)/sin(theta) D_{+1/2}   = -a D_{-1/2} - b D_{+3/2}
///   d_theta D_{-1/2}                          =  b D_{-3/2} - a D_{+1/2}
///   (-m + cos(theta)/2)/sin(theta) D_{-1/2}   = -b D_{-3/2} - a D_{+1/2}
/// theta-derivatives use a fourth-order central stencil with h = 1e-4.
/// Throws DomainError at the poles theta in {0, pi}.
double recurrence_residual(HalfInt j, HalfInt m, double theta);
double recurrence_residual(HalfInt j, HalfInt m, double theta, const RecurrenceCoefficients& coeffs);

/// Spinor built from constant radial amplitudes f = (f1, f2, f3, f4).
Spinor4 assemble_spinor(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi);

/// Amplitudes (f1, f2, delta f2, delta f1) of the fixed-parity spinor.
Spinor4 fixed_parity_amplitudes(int delta, cplx f1, cplx f2);

/// Sigma_{theta phi} = i gamma^1 d_theta + gamma^2 (i d_phi + i sigma^{12} cos theta)/sin theta
/// applied to the assembled spinor, with gamma matrices in the spinor basis
/// gamma^0 = [[0, I], [I, 0]], gamma^k = [[0, -s_k], [s_k, 0]],
/// sigma^{12} = [gamma^1, gamma^2]/4. Derivatives by fourth-order stencil.
Spinor4 apply_sigma_operator(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi);

/// Max deviation of Sigma phi_jm from i nu (-f4 D_{-1/2}, f3 D_{+1/2}, f2 D_{-1/2}, -f1 D_{+1/2}).
/// `nu_shift` offsets nu in the expected pattern (used to confirm the check discriminates).
double sigma_action_residual(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi,
                             double nu_shift = 0.0);

/// Expected parity eigenvalue delta (-1)^{j+1}, with (-1)^j = exp(i pi j).
cplx parity_eigenvalue(HalfInt j, int delta);

/// Reflection (theta, phi) -> (pi - theta, phi + pi) composed with the
/// spherical-tetrad parity matrix (anti-diagonal, entries -1).
Spinor4 apply_parity(const QuantumNumbers& qn, const Spinor4& f, double theta, double phi);

/// max_k |(Pi Psi)_k - eigenvalue Psi_k| for the fixed-parity spinor built from (f1, f2, qn.delta).
double parity_residual(const QuantumNumbers& qn, cplx f1, cplx f2, double theta, double phi,
                       cplx eigenvalue);

/// parity_residual against parity_eigenvalue(qn.j, qn.delta).
double parity_check(const QuantumNumbers& qn, cplx f1, cplx f2, double theta, double phi);

}  // namespace pauli_ds

#endif  // PAULI_DS_ANGULAR_HPP
