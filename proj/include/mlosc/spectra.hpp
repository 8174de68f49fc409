#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "mlosc/errors.hpp"
#include "mlosc/numerics.hpp"
#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"
#include "mlosc/specfun.hpp"

namespace mlosc {

struct EnergyLevel {
  int n;
  double E;
  double nu;
};

struct BoundSpectrum {
  Regime regime;
  double d_tilde = 0.0;
  std::optional<double> mu;
  std::vector<EnergyLevel> levels;
  bool finite = false;
  std::optional<int> n_max;  // largest bound index N when finite
};

/// E_n = (n + 1/2) hbar d~ + (hbar^2 lambda/2) n(n+1) - (hbar^2 lambda/2)(a+g),
/// n = 0..n_max.  Spectrum is produced for singular orderings too; only
/// eigenstate construction rejects them.
BoundSpectrum bound_spectrum_positive(const OscillatorParams& p,
                                      const OrderingMeans& means, int n_max);

/// Finite spectrum for lambda < 0: n = 0..N with N the largest integer with
/// mu > N + 1/2 (strict).  Throws NoBoundStates when mu <= 1/2.
BoundSpectrum bound_spectrum_negative(const OscillatorParams& p,
                                      const OrderingMeans& means);

/// lambda = 0: E_n = (n + 1/2) hbar sqrt(k).
BoundSpectrum harmonic_spectrum(const OscillatorParams& p, int n_max);

enum class Branch { Region1, Region3 };

struct ContinuumState {
  double rho;
  double mu;
  Branch branch;
  double E;
};

ContinuumState continuum_energy(double rho, const OscillatorParams& p,
                                const OrderingMeans& means,
                                Branch branch = Branch::Region3);

/// Normalized bound eigenstate.  The evaluator is pure; values() exists so
/// callers can batch without losing that purity.
class Eigenstate {
public:
  Eigenstate(int n, double mu, OrderingMeans means, OscillatorParams params,
             double normalization, Regime regime);

  double value(double x) const;
  Eigen::VectorXd values(const Eigen::VectorXd& xs) const;

  int n() const { return n_; }
  double mu() const { return mu_; }
  double normalization() const { return normalization_; }
  Regime regime() const { return regime_; }
  const OrderingMeans& means() const { return means_; }
  const OscillatorParams& params() const { return params_; }

private:
  int n_;
  double mu_;
  OrderingMeans means_;
  OscillatorParams params_;
  double normalization_;
  Regime regime_;
};

/// psi_n(x) = N_n (1-lambda x^2)^{(g-a)/2} P_{n+mu}^{-mu}(sqrt(lambda) x) on
/// region-2, zero outside.  N_n from the closed-form orthonormality relation.
/// Throws SingularOrdering for gamma_bar < alpha_bar, MuOutOfRange for
/// mu <= -1.
Eigenstate eigenstate_positive(int n, const OscillatorParams& p,
                               const OrderingMeans& means);

/// psi_n(x) = N_n (1+|lambda| x^2)^{(g-a)/2} * Gegenbauer profile, normalized
/// by real-line quadrature (the closed form degenerates at integer mu).
/// Throws MuOutOfRange unless mu > n + 1/2.
Eigenstate eigenstate_negative(int n, const OscillatorParams& p,
                               const OrderingMeans& means);

/// Continuum state on region 1 or 3, built on the conical Legendre solution.
/// Amplitude unnormalized (delta normalization out of scope).
class ContinuumWavefunction {
public:
  ContinuumWavefunction(ContinuumState state, OrderingMeans means,
                        OscillatorParams params, ConicalOptions opts);

  /// Single-point evaluation (integrates one trajectory per call).
  double value(double x) const;

  /// Batch evaluation sharing one ODE trajectory.
  Eigen::VectorXd values(const Eigen::VectorXd& xs) const;

  const ContinuumState& state() const { return state_; }

private:
  ContinuumState state_;
  OrderingMeans means_;
  OscillatorParams params_;
  ConicalOptions opts_;
};

ContinuumWavefunction eigenstate_continuum(double rho,
                                           const OscillatorParams& p,
                                           const OrderingMeans& means,
                                           Branch branch,
                                           ConicalOptions opts = {});

/// Parameters of the deformed-Hermite reduction: exponent d, rescaled
/// lambda~ = hbar lambda / d~, and B = lambda~ n (n + 2 mu + 1).
struct LambdaHermiteForm {
  double d;
  double lambda_tilde;
  double B;
};

LambdaHermiteForm lambda_hermite_form(int n, const OscillatorParams& p,
                                      const OrderingMeans& means);

/// Energy recovered from the deformed-Hermite eigenvalue relation; agrees
/// with bound_spectrum_positive algebraically.
double lambda_hermite_energy(int n, const OscillatorParams& p,
                             const OrderingMeans& means);

/// Sturm-Liouville weight (1 - lambda x^2)^{-(gamma_bar - alpha_bar)}.
double weight_function(double x, const OscillatorParams& p,
                       const OrderingMeans& means);

}  // namespace mlosc
