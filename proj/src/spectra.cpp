#include "mlosc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "mlosc/specfun.hpp"

namespace mlosc {

namespace {

// Every emitted level must satisfy the closed-form energy relation
// E = (hbar^2 lambda / 2)(nu(nu+1) - mu^2 - (gamma_bar + alpha_bar)).
EnergyLevel checked_level(int n, double energy, double nu,
                          const OscillatorParams& p, const OrderingMeans& m,
                          double mu) {
  const double expected = 0.5 * p.hbar * p.hbar * p.lambda *
                          (nu * (nu + 1.0) - mu * mu -
                           (m.gamma_bar + m.alpha_bar));
  if (std::abs(energy - expected) > 1e-10 * std::max(1.0, std::abs(energy))) {
    std::ostringstream msg;
    msg << "level n=" << n << " violates the energy relation: " << energy
        << " vs " << expected;
    throw Error(msg.str());
  }
  return EnergyLevel{n, energy, nu};
}

}  // namespace

BoundSpectrum bound_spectrum_positive(const OscillatorParams& p,
                                      const OrderingMeans& means, int n_max) {
  if (!(p.lambda > 0.0)) {
    throw WrongRegime("positive-lambda spectrum requires lambda > 0");
  }
  if (n_max < 0) {
    throw BadParameters("n_max must be non-negative");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  const double h2l = 0.5 * p.hbar * p.hbar * p.lambda;
  BoundSpectrum spectrum;
  spectrum.regime = Regime::PositiveLambdaInterior;
  spectrum.d_tilde = sp.d_tilde;
  spectrum.mu = mu;
  spectrum.finite = false;
  spectrum.levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double energy = (n + 0.5) * p.hbar * sp.d_tilde +
                          h2l * (n * (n + 1.0) -
                                 (means.alpha_bar + means.gamma_bar));
    spectrum.levels.push_back(
        checked_level(n, energy, n + mu, p, means, mu));
  }
  return spectrum;
}

BoundSpectrum bound_spectrum_negative(const OscillatorParams& p,
                                      const OrderingMeans& means) {
  if (!(p.lambda < 0.0)) {
    throw WrongRegime("negative-lambda spectrum requires lambda < 0");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  if (!(mu > 0.5)) {
    std::ostringstream msg;
    msg << "mu = " << mu << " <= 1/2: no normalizable level exists";
    throw NoBoundStates(msg.str());
  }
  // largest integer N with mu > N + 1/2, strict: the normalization integral
  // diverges at mu = n + 1/2.
  const int n_cut = static_cast<int>(std::ceil(mu - 0.5)) - 1;
  const double abs_lambda = std::abs(p.lambda);
  const double h2l = 0.5 * p.hbar * p.hbar * abs_lambda;
  BoundSpectrum spectrum;
  spectrum.regime = Regime::NegativeLambda;
  spectrum.d_tilde = sp.d_tilde;
  spectrum.mu = mu;
  spectrum.finite = true;
  spectrum.n_max = n_cut;
  spectrum.levels.reserve(n_cut + 1);
  for (int n = 0; n <= n_cut; ++n) {
    const double energy = -n * (n + 1.0) * h2l + (n + 0.5) * p.hbar * sp.d_tilde +
                          h2l * (means.gamma_bar + means.alpha_bar);
    spectrum.levels.push_back(
        checked_level(n, energy, n - mu, p, means, mu));
  }
  return spectrum;
}

BoundSpectrum harmonic_spectrum(const OscillatorParams& p, int n_max) {
  if (p.lambda != 0.0) {
    throw WrongRegime("harmonic spectrum is the lambda = 0 regime");
  }
  if (n_max < 0) {
    throw BadParameters("n_max must be non-negative");
  }
  BoundSpectrum spectrum;
  spectrum.regime = Regime::HarmonicLimit;
  spectrum.d_tilde = std::sqrt(p.k);
  spectrum.finite = false;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int n = 0; n <= n_max; ++n) {
    spectrum.levels.push_back(
        EnergyLevel{n, (n + 0.5) * p.hbar * std::sqrt(p.k), nan});
  }
  return spectrum;
}

ContinuumState continuum_energy(double rho, const OscillatorParams& p,
                                const OrderingMeans& means, Branch branch) {
  if (!(p.lambda > 0.0)) {
    throw WrongRegime("continuum states exist for lambda > 0 only");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  const double energy =
      0.5 * p.hbar * p.hbar * p.lambda *
      (-0.25 - rho * rho - mu * mu - (means.alpha_bar + means.gamma_bar));
  return ContinuumState{rho, mu, branch, energy};
}

Eigenstate::Eigenstate(int n, double mu, OrderingMeans means,
                       OscillatorParams params, double normalization,
                       Regime regime)
    : n_(n),
      mu_(mu),
      means_(std::move(means)),
      params_(std::move(params)),
      normalization_(normalization),
      regime_(regime) {}

double Eigenstate::value(double x) const {
  const double exponent = 0.5 * (means_.gamma_bar - means_.alpha_bar);
  if (regime_ == Regime::PositiveLambdaInterior) {
    const double z = std::sqrt(params_.lambda) * x;
    if (std::abs(z) >= 1.0) {
      return 0.0;  // bounded in region-2 only
    }
    return normalization_ * std::pow((1.0 - z) * (1.0 + z), exponent) *
           legendre_nonint_poly(n_, mu_, z);
  }
  const double y = std::sqrt(std::abs(params_.lambda)) * x;
  return normalization_ * std::pow(1.0 + y * y, exponent) *
         legendre_imag_gegenbauer(n_, mu_, y);
}

Eigen::VectorXd Eigenstate::values(const Eigen::VectorXd& xs) const {
  Eigen::VectorXd out(xs.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    out[i] = value(xs[i]);
  }
  return out;
}

Eigenstate eigenstate_positive(int n, const OscillatorParams& p,
                               const OrderingMeans& means) {
  if (!(p.lambda > 0.0)) {
    throw WrongRegime("eigenstate_positive requires lambda > 0");
  }
  if (n < 0) {
    throw BadParameters("level index must be non-negative");
  }
  if (classify_regularity(means) == Regularity::SingularEigenfunctions) {
    throw SingularOrdering(
        "gamma_bar < alpha_bar: eigenfunctions are singular at the interval ends");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  if (!(mu > -1.0)) {
    throw MuOutOfRange("normalization requires mu > -1");
  }
  // N_n^2 = sqrt(lambda) (2n+2mu+1) Gamma(n+2mu+1) / (2 n!)
  const double log_norm2 = 0.5 * std::log(p.lambda) +
                           std::log(2.0 * n + 2.0 * mu + 1.0) +
                           log_gamma(n + 2.0 * mu + 1.0).log_abs -
                           std::log(2.0) - log_gamma(n + 1.0).log_abs;
  return Eigenstate(n, mu, means, p, std::exp(0.5 * log_norm2),
                    Regime::PositiveLambdaInterior);
}

Eigenstate eigenstate_negative(int n, const OscillatorParams& p,
                               const OrderingMeans& means) {
  if (!(p.lambda < 0.0)) {
    throw WrongRegime("eigenstate_negative requires lambda < 0");
  }
  if (n < 0) {
    throw BadParameters("level index must be non-negative");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  if (!(mu > n + 0.5)) {
    std::ostringstream msg;
    msg << "mu = " << mu << " <= n + 1/2 = " << n + 0.5
        << ": state not normalizable";
    throw MuOutOfRange(msg.str());
  }
  // The closed-form norm degenerates at integer mu, so normalize by
  // quadrature of the real profile.
  const double profile_norm = integrate_real_line([n, mu](double y) {
    const double v = legendre_imag_gegenbauer(n, mu, y);
    return v * v;
  });
  const double sqrt_abs_lambda = std::sqrt(std::abs(p.lambda));
  const double normalization = std::sqrt(sqrt_abs_lambda / profile_norm);
  return Eigenstate(n, mu, means, p, normalization, Regime::NegativeLambda);
}

ContinuumWavefunction::ContinuumWavefunction(ContinuumState state,
                                             OrderingMeans means,
                                             OscillatorParams params,
                                             ConicalOptions opts)
    : state_(state),
      means_(std::move(means)),
      params_(std::move(params)),
      opts_(opts) {}

double ContinuumWavefunction::value(double x) const {
  Eigen::VectorXd xs(1);
  xs[0] = x;
  return values(xs)[0];
}

Eigen::VectorXd ContinuumWavefunction::values(const Eigen::VectorXd& xs) const {
  const double sign = state_.branch == Branch::Region3 ? 1.0 : -1.0;
  const double sqrt_lambda = std::sqrt(params_.lambda);
  const Eigen::Index count = xs.size();

  // Collect the points inside the branch region, sorted in z, evaluate the
  // conical solution along one trajectory, then scatter back.
  std::vector<std::pair<double, Eigen::Index>> live;
  live.reserve(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double z = sign * sqrt_lambda * xs[i];
    if (z > 1.0) {
      live.emplace_back(z, i);
    }
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(count);
  if (live.empty()) {
    return out;
  }
  std::sort(live.begin(), live.end());
  Eigen::VectorXd zs(static_cast<Eigen::Index>(live.size()));
  Eigen::Index unique_count = 0;
  for (const auto& [z, idx] : live) {
    if (unique_count == 0 || z > zs[unique_count - 1]) {
      zs[unique_count++] = z;
    }
  }
  const Eigen::VectorXd phi = conical_legendre_samples(
      state_.rho, state_.mu, zs.head(unique_count), opts_);

  const double exponent = 0.5 * (means_.gamma_bar - means_.alpha_bar);
  Eigen::Index cursor = 0;
  for (const auto& [z, idx] : live) {
    while (zs[cursor] < z) {
      ++cursor;
    }
    const double x = xs[idx];
    const double prefactor =
        std::pow(std::abs(1.0 - params_.lambda * x * x), exponent);
    out[idx] = prefactor * phi[cursor];
  }
  return out;
}

ContinuumWavefunction eigenstate_continuum(double rho,
                                           const OscillatorParams& p,
                                           const OrderingMeans& means,
                                           Branch branch, ConicalOptions opts) {
  return ContinuumWavefunction(continuum_energy(rho, p, means, branch), means,
                               p, opts);
}

LambdaHermiteForm lambda_hermite_form(int n, const OscillatorParams& p,
                                      const OrderingMeans& means) {
  if (!(p.lambda > 0.0)) {
    throw WrongRegime("deformed-Hermite reduction requires lambda > 0");
  }
  if (n < 0) {
    throw BadParameters("level index must be non-negative");
  }
  const SpectralParams sp = spectral_params(p, means);
  const double mu = *sp.mu;
  LambdaHermiteForm form;
  form.d = 0.5 * (means.gamma_bar - means.alpha_bar) +
           sp.d_tilde / (2.0 * p.hbar * p.lambda);
  form.lambda_tilde = p.hbar * p.lambda / sp.d_tilde;
  form.B = form.lambda_tilde * n * (n + 2.0 * mu + 1.0);
  return form;
}

double lambda_hermite_energy(int n, const OscillatorParams& p,
                             const OrderingMeans& means) {
  const SpectralParams sp = spectral_params(p, means);
  const LambdaHermiteForm form = lambda_hermite_form(n, p, means);
  // Invert B = (hbar/d~)(b - (lt (g-a) + 1) d~/hbar) with b = 2 lambda g + 2E/hbar^2.
  const double diff = means.gamma_bar - means.alpha_bar;
  return 0.5 * p.hbar * sp.d_tilde *
             (form.B + form.lambda_tilde * diff + 1.0) -
         p.hbar * p.hbar * p.lambda * means.gamma_bar;
}

double weight_function(double x, const OscillatorParams& p,
                       const OrderingMeans& means) {
  const double u = 1.0 - p.lambda * x * x;
  if (p.lambda > 0.0 && std::abs(u) < kSingularTol) {
    throw SingularPoint("weight function evaluated at a mass pole");
  }
  return std::pow(u, -(means.gamma_bar - means.alpha_bar));
}

}  // namespace mlosc
