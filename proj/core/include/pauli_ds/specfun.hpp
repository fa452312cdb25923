#ifndef PAULI_DS_SPECFUN_HPP
#define PAULI_DS_SPECFUN_HPP

#include <complex>
#include <optional>

namespace pauli_ds {

using cplx = std::complex<double>;

/// Rising factorial x (x+1) ... (x+k-1); 1 for k = 0.
cplx pochhammer(cplx x, int k);

/// log Gamma(z) on the principal branch (Lanczos, with reflection).
cplx log_gamma(cplx z);

/// 1/Gamma(z); exactly zero at the non-positive integers.
cplx reciprocal_gamma(cplx z);

enum class HypRegime {
  polynomial,         // a or b is a non-positive integer: finite sum
  direct_series,      // 0 <= y <= 1/2
  pfaff_transformed,  // y < 0, mapped to y/(y-1) in (0, 1)
  connection,         // 1/2 < y < 1, y -> 1 - y, needs c - a - b non-integral
};

/// Parameters (a, b; c) of the Gauss hypergeometric function 2F1.
class HypParams {
 public:
  HypParams(cplx a, cplx b, cplx c);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }

  /// Degree n when a or b equals -n (within 1e-12), otherwise empty.
  std::optional<int> terminating_degree() const { return degree_; }

  /// Evaluation route hyp2f1 takes at argument y. Throws DomainError for y >= 1.
  HypRegime regime(double y) const;

  /// (a+1, b+1; c+1), the parameters of the derivative.
  HypParams raised() const { return {a_ + 1.0, b_ + 1.0, c_ + 1.0}; }

 private:
  cplx a_, b_, c_;
  std::optional<int> degree_;
};

/// 2F1(a, b; c; y) for real y < 1.
///
/// Dispatch: a terminating series is summed exactly for any y < 1; otherwise
/// the power series is used on [0, 1/2], the Pfaff transformation
/// (1-y)^{-a} 2F1(a, c-b; c; y/(y-1)) for y < 0, and the y -> 1-y connection
/// formula on (1/2, 1). The last needs c - a - b non-integral and throws
/// NotImplementedError otherwise.
///
/// Throws DomainError (y >= 1), PoleError (c at a non-positive integer before
/// termination) or ConvergenceError (series cap reached).
cplx hyp2f1(const HypParams& p, double y);

/// d/dy 2F1(a, b; c; y) = (ab/c) 2F1(a+1, b+1; c+1; y).
cplx hyp2f1_deriv(const HypParams& p, double y);

// Individual routes, exposed so they can be cross-checked against each other.
namespace hyp2f1_route {

/// Power series, truncated when 25 consecutive terms fall below 1e-16 of the
/// partial sum (10000-term cap). Requires |y| < 1.
cplx series(const HypParams& p, double y);

/// Pfaff transformation onto y/(y-1); the transformed function is evaluated
/// through hyp2f1 itself. Requires y < 1.
cplx pfaff(const HypParams& p, double y);

/// Connection formula around y = 1. Requires 0 < y < 1 and c - a - b not an integer.
cplx connection(const HypParams& p, double y);

}  // namespace hyp2f1_route

}  // namespace pauli_ds

#endif  // PAULI_DS_SPECFUN_HPP
