#pragma once

#include <optional>

#include "mlosc/errors.hpp"
#include "mlosc/ordering.hpp"

namespace mlosc {

/// Points closer than this to a pole of m(x) are treated as singular.
inline constexpr double kSingularTol = 1e-14;

/// Physical constants of the oscillator m(x) = 1/(1 - lambda x^2),
/// V(x) = k x^2 / (2 (1 - lambda x^2)).
struct OscillatorParams {
  OscillatorParams(double k, double lambda, double hbar);

  double k;
  double lambda;
  double hbar;
};

/// Coefficients of the reduced equation
///   (1 - lambda x^2) psi'' + 2 a lambda x psi' + (b + c x^2/(1 - lambda x^2)) psi = 0
/// with b(E) = b_const + b_slope * E.
struct ReducedCoefficients {
  double a;
  double b_const;
  double b_slope;
  double c;

  double b(double energy) const { return b_const + b_slope * energy; }
};

enum class Regime {
  PositiveLambdaInterior,
  PositiveLambdaContinuum,
  NegativeLambda,
  HarmonicLimit,
};

/// d_tilde and mu of the associated Legendre reduction.  mu is absent in the
/// harmonic limit (lambda = 0), where it would diverge.
struct SpectralParams {
  double d_tilde;
  std::optional<double> mu;
  Regime regime;
};

enum class Regularity { Regular, SingularEigenfunctions };

/// Classical solution x(t) = A sin(omega t + delta).
struct ClassicalOrbit {
  double amplitude;
  double omega;
  double delta;
};

double mass(double x, const OscillatorParams& p);

double potential(double x, const OscillatorParams& p);

double effective_potential(double x, const OscillatorParams& p,
                           const OrderingMeans& means);

ReducedCoefficients reduced_coefficients(const OscillatorParams& p,
                                         const OrderingMeans& means);

/// Throws ImaginaryMu when the radicand of d_tilde is negative.
SpectralParams spectral_params(const OscillatorParams& p,
                               const OrderingMeans& means);

/// Degree of the level-n eigenfunction: n + mu for lambda > 0, n - mu for
/// lambda < 0.  Throws WrongRegime outside the bound regimes.
double nu_for_level(int n, const SpectralParams& sp);

/// SingularEigenfunctions iff gamma_bar < alpha_bar.
Regularity classify_regularity(const OrderingMeans& means);

/// Amplitude-dependent frequency omega^2 (1 + lambda A^2) = k.
ClassicalOrbit classical_orbit(double amplitude, double delta,
                               const OscillatorParams& p);

}  // namespace mlosc
