#pragma once

#include <Eigen/Core>

#include "mlosc/errors.hpp"

namespace mlosc {

/// log |Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

enum class LegendreVariant { RealInterval, ImaginaryArgument };

/// Index of a non-integral-order Legendre profile: polynomial order n and
/// order parameter mu.  For ImaginaryArgument profiles used in normalizable
/// states, mu > n + 1/2 is the caller's responsibility.
struct PolySpec {
  PolySpec(int n, double mu, LegendreVariant variant);

  int n;
  double mu;
  LegendreVariant variant;
};

/// Dispatches to legendre_nonint_poly (RealInterval, arg in [-1, 1]) or
/// legendre_imag_gegenbauer (ImaginaryArgument, any real arg).
double legendre_profile(const PolySpec& spec, double arg);

/// Lanczos evaluation, reflection for x < 0.5.
/// Throws PoleAtNonPositiveInteger at x in {0, -1, -2, ...}.
LogGamma log_gamma(double x);

/// sign * exp(log|Gamma|).  Overflows to +-inf for large x.
double gamma_value(double x);

/// 1/Gamma(x), defined as exactly 0 at the poles x in {0, -1, -2, ...}.
/// This zero is what kills the redundant hypergeometric branch in the
/// polynomial reductions.
double reciprocal_gamma(double x);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
double pochhammer(double a, int n);

/// Terminating Gauss series F(-n, b; c; z): exact sum of n+1 terms.
/// Throws BadParameters when n < 0 or when c is a non-positive integer
/// reached before the series terminates.
double hyp2f1_terminating(int n, double b, double c, double z);

/// Convergent Gauss series F(a, b; c; z), |z| <= 0.9 enforced.
/// Partial sums until |term| < 1e-15 |sum|; throws NoConvergence past
/// 10000 terms, BadParameters for c at a non-positive integer.
double hyp2f1_series(double a, double b, double c, double z);

/// Jacobi polynomial P_n^{(a,b)}(z) by the three-term recurrence.
double jacobi_poly(int n, double a, double b, double z);

/// First derivative d/dz P_n^{(a,b)}(z) (via the shifted-parameter identity).
double jacobi_poly_derivative(int n, double a, double b, double z);

/// Second derivative d^2/dz^2 P_n^{(a,b)}(z).
double jacobi_poly_second_derivative(int n, double a, double b, double z);

/// Gegenbauer polynomial C_n^{alpha}(z) by recurrence; the recurrence is run
/// formally for any real alpha (the imaginary-argument reduction uses
/// alpha = mu - n, which may be negative).
double gegenbauer_poly(int n, double alpha, double z);

/// P_{n+mu}^{-mu}(z) on [-1, 1] via the terminating hypergeometric forms
/// (separate even/odd reductions).  Requires mu > -1.  Exactly 0 at
/// z = +-1 for mu > 0.
double legendre_nonint_poly(int n, double mu, double z);

/// Same function through the Jacobi-polynomial relation
///   2^{-mu} n!/Gamma(n+mu+1) (1-z^2)^{mu/2} P_n^{(mu,mu)}(z).
/// No (-1)^n prefactor: with it, the odd-n values flip sign relative to the
/// terminating hypergeometric forms.
double legendre_nonint_via_jacobi(int n, double mu, double z);

/// General-degree series evaluation of P_nu^{-mu}(z), |z| <= 0.9.  Gamma
/// poles in the coefficient denominators zero the corresponding bracket.
double legendre_series_general(double nu, double mu, double z);

/// Real profile of the imaginary-argument reduction:
///   (1+y^2)^{(n-mu)/2} C_n^{mu-n}(y / sqrt(1+y^2)).
/// Constant phase and gamma prefactor dropped; callers normalize by
/// quadrature.
double legendre_imag_gegenbauer(int n, double mu, double y);

struct ConicalOptions {
  double z_start = 1.0 + 1e-4;  // Frobenius launch point
  double z_max = 10.0;
  double rel_tol = 1e-10;
};

/// Real conical solution of the Legendre equation on z > 1 with
/// nu(nu+1) = -1/4 - rho^2, normalized so phi ~ (z^2-1)^{mu/2} as z -> 1+
/// with unit leading coefficient.  Two-term Frobenius data below z_start,
/// adaptive integration above.
double conical_legendre(double rho, double mu, double z,
                        const ConicalOptions& opts = {});

/// Batch evaluation along one trajectory; zs must be ascending and within
/// [1 + 1e-6, z_max].  Sharing the trajectory keeps the pointwise errors
/// smooth in z, which finite-difference residual checks rely on.
Eigen::VectorXd conical_legendre_samples(double rho, double mu,
                                         const Eigen::VectorXd& zs,
                                         const ConicalOptions& opts = {});

/// Rodrigues form
///   (-1)^n / (2^{n+mu} Gamma(n+mu+1)) (1-z^2)^{-mu/2} d^n/dz^n (1-z^2)^{n+mu}
/// with the derivative expanded exactly by the Leibniz rule; |z| < 1.
double rodrigues_eval(int n, double mu, double z);

}  // namespace mlosc
