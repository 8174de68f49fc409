#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlosc/numerics.hpp"
#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"
#include "mlosc/spectra.hpp"

namespace mlosc {

struct VerificationReport {
  std::string check_name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::map<std::string, double> details;
};

VerificationReport make_report(std::string name, double max_error,
                               double tolerance,
                               std::map<std::string, double> details = {});

struct VerifyConfig {
  int n_levels = 6;        // Gram-matrix size
  int quad_order = 256;
  int oracle_levels = 3;
  FDGrid positive_grid{-1.0, 1.0, 4000, 1e-6};
  double negative_L = 40.0;
  int negative_points = 8000;
  int identity_n_max = 8;
  int identity_samples = 41;
  std::vector<double> identity_mus{0.5, 1.0, 2.5};
};

/// Gram matrix of the weighted eigenstates over region-2 against identity.
VerificationReport check_orthonormality_positive(const OscillatorParams& p,
                                                 const OrderingMeans& means,
                                                 int n_levels, int quad_order);

/// Terminating hypergeometric forms against the Jacobi-polynomial relation.
/// details records the mismatch of the (-1)^n-prefixed variant: every odd n
/// flips sign (ratio -1).
VerificationReport check_jacobi_relation(const std::vector<double>& mus,
                                         int n_max, int sample_count);

/// Terminating forms against the Leibniz-expanded Rodrigues formula.
VerificationReport check_rodrigues(const std::vector<double>& mus, int n_max,
                                   int sample_count);

/// Residual of the deformed-Hermite equation on P_n^{(mu,mu)}(sqrt(lt) y)
/// with analytic Jacobi derivatives, plus energy agreement with the main
/// spectrum.
VerificationReport check_lambda_hermite(const OscillatorParams& p,
                                        const OrderingMeans& means, int n_max);

/// lambda < 0 eigenfunction profile against the Gegenbauer form: the ratio
/// must be constant across samples; for non-integer mu the quadrature norm is
/// also compared against the closed-form magnitude.
VerificationReport check_gegenbauer_relation(double mu, int n_max,
                                             int sample_count);

/// Closed-form spectrum against the finite-difference oracle.
VerificationReport check_spectrum_vs_oracle(const OscillatorParams& p,
                                            const OrderingMeans& means,
                                            int m_levels, const FDGrid& grid);

/// Degree-reflection symmetry nu -> -(nu+1) of the general series.
VerificationReport check_nu_reflection(const std::vector<double>& nus,
                                       const std::vector<double>& mus,
                                       const std::vector<double>& zs);

/// Parity of the terminating Legendre forms.
VerificationReport check_parity(const std::vector<double>& mus, int n_max,
                                int sample_count);

/// Quadrature exactness on the highest exactly-integrable monomials.
VerificationReport check_quadrature_exactness();

/// Richardson slope of the positive finite-difference oracle across three
/// refinements; second-order scheme gives slope ~ 2.
VerificationReport check_fd_convergence(double mu);

/// Spectrum invariance for a synthesized ordering with equal (a+g) and
/// (g-a)^2 + 4 ag.
VerificationReport check_mean_combination(const OscillatorParams& p,
                                          const OrderingMeans& means);

/// Spectrum at a vanishing lambda against the harmonic levels.
VerificationReport check_harmonic_limit(const OscillatorParams& p,
                                        const OrderingMeans& means);

/// Every applicable check for the regime, in declared order.  An imaginary-mu
/// ordering yields a single failed validity report.
std::vector<VerificationReport> run_all(const OscillatorParams& p,
                                        const OrderingMeans& means,
                                        const VerifyConfig& config = {});

}  // namespace mlosc
