#include "mlosc/oscillator.hpp"

#include <cmath>
#include <sstream>

namespace mlosc {

OscillatorParams::OscillatorParams(double k, double lambda, double hbar)
    : k(k), lambda(lambda), hbar(hbar) {
  if (!(hbar > 0.0)) {
    throw BadParameters("hbar must be positive");
  }
  if (!(k > 0.0)) {
    throw BadParameters("k must be positive (oscillator regime)");
  }
}

namespace {

double one_minus_lambda_x2(double x, const OscillatorParams& p) {
  const double u = 1.0 - p.lambda * x * x;
  if (std::abs(u) < kSingularTol) {
    std::ostringstream msg;
    msg << "x = " << x << " is a singular point of the mass profile";
    throw SingularPoint(msg.str());
  }
  return u;
}

}  // namespace

double mass(double x, const OscillatorParams& p) {
  return 1.0 / one_minus_lambda_x2(x, p);
}

double potential(double x, const OscillatorParams& p) {
  return p.k * x * x / (2.0 * one_minus_lambda_x2(x, p));
}

double effective_potential(double x, const OscillatorParams& p,
                           const OrderingMeans& means) {
  const double u = one_minus_lambda_x2(x, p);
  const double h2 = p.hbar * p.hbar;
  const double l2 = p.lambda * p.lambda;
  return 0.5 * h2 *
             (-2.0 * p.lambda * means.gamma_bar +
              4.0 * means.alphagamma_bar * l2 * x * x / u) +
         p.k * x * x / (2.0 * u);
}

ReducedCoefficients reduced_coefficients(const OscillatorParams& p,
                                         const OrderingMeans& means) {
  const double h2 = p.hbar * p.hbar;
  ReducedCoefficients rc;
  rc.a = means.gamma_bar - means.alpha_bar - 1.0;
  rc.b_const = 2.0 * p.lambda * means.gamma_bar;
  rc.b_slope = 2.0 / h2;
  rc.c = -(4.0 * means.alphagamma_bar * p.lambda * p.lambda + p.k / h2);
  return rc;
}

SpectralParams spectral_params(const OscillatorParams& p,
                               const OrderingMeans& means) {
  if (p.lambda == 0.0) {
    return SpectralParams{std::sqrt(p.k), std::nullopt, Regime::HarmonicLimit};
  }
  const double diff = means.gamma_bar - means.alpha_bar;
  const double radicand =
      p.k + p.hbar * p.hbar * p.lambda * p.lambda *
                (diff * diff + 4.0 * means.alphagamma_bar);
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "imaginary mu: radicand = " << radicand;
    throw ImaginaryMu(radicand, msg.str());
  }
  const double d_tilde = std::sqrt(radicand);
  const double mu = d_tilde / (p.hbar * std::abs(p.lambda));
  return SpectralParams{d_tilde, mu,
                        p.lambda > 0.0 ? Regime::PositiveLambdaInterior
                                       : Regime::NegativeLambda};
}

double nu_for_level(int n, const SpectralParams& sp) {
  if (n < 0) {
    throw BadParameters("level index must be non-negative");
  }
  switch (sp.regime) {
    case Regime::PositiveLambdaInterior:
      return static_cast<double>(n) + *sp.mu;
    case Regime::NegativeLambda:
      return static_cast<double>(n) - *sp.mu;
    default:
      throw WrongRegime("nu_for_level requires a bound regime");
  }
}

Regularity classify_regularity(const OrderingMeans& means) {
  return means.gamma_bar + kOrderingTol < means.alpha_bar
             ? Regularity::SingularEigenfunctions
             : Regularity::Regular;
}

ClassicalOrbit classical_orbit(double amplitude, double delta,
                               const OscillatorParams& p) {
  const double denom = 1.0 + p.lambda * amplitude * amplitude;
  if (denom <= 0.0) {
    std::ostringstream msg;
    msg << "1 + lambda A^2 = " << denom << " <= 0";
    throw InvalidAmplitude(msg.str());
  }
  // omega0^2 = k: the lambda -> 0 limit is the unit-mass harmonic oscillator.
  return ClassicalOrbit{amplitude, std::sqrt(p.k / denom), delta};
}

}  // namespace mlosc
