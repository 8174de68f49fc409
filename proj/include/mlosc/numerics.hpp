#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "mlosc/errors.hpp"
#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"

namespace mlosc {

/// Gauss-Legendre nodes and weights on (-1, 1).
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Nodes by Newton iteration from Chebyshev initial guesses; exact for
/// polynomials of degree <= 2*order - 1.  order <= 2048.
QuadratureRule gauss_legendre(int order);

/// Integrates f over [a, b] with the affine node map.
/// Throws NonFiniteSample if f is non-finite at a mapped node.
double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f, double a, double b);

/// Integral over the whole real line: fixed panel on [-1, 1] plus
/// geometrically growing panels [2^j, 2^{j+1}] on both tails, stopping once
/// a panel pair contributes below rel_tol relative to the running total.
double integrate_real_line(const std::function<double(double)>& f,
                           int panel_order = 48, double rel_tol = 1e-13);

/// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal, by Sturm-sequence bisection.
Eigen::VectorXd tridiag_lowest_eigenvalues(const Eigen::VectorXd& diag,
                                           const Eigen::VectorXd& offdiag,
                                           int count);

/// Number of eigenvalues of the tridiagonal matrix strictly below shift.
int tridiag_count_below(const Eigen::VectorXd& diag,
                        const Eigen::VectorXd& offdiag, double shift);

/// Finite-difference grid: Sturm-Liouville interval [a, b] with interior
/// `points` and an endpoint offset epsilon for singular endpoints.
struct FDGrid {
  double a = -1.0;
  double b = 1.0;
  int points = 4000;
  double epsilon = 1e-6;
};

/// Lowest `count` eigenvalues Lambda_n of
///   -d/dz[(1-z^2) phi'] + mu^2/(1-z^2) phi = Lambda phi
/// on [a+eps, b-eps] with Dirichlet ends, flux-form central differences.
/// Converges to (n+mu)(n+mu+1) as eps, h -> 0.
Eigen::VectorXd fd_oracle_positive(double mu, const FDGrid& grid, int count);

struct NegativeOracleResult {
  Eigen::VectorXd energies;
  std::vector<bool> bound;  // per level: within the finite bound window
  bool tail_warning;        // top bound eigenfunction not yet < 1e-8 at +-L
};

/// Discretizes d/dy[(1+y^2) phi'] + [-Lambda + mu^2/(1+y^2)] phi = 0 on
/// [-L, L] and maps the lowest `count` eigenvalues to energies through the
/// closed-form energy relation with signed lambda.
NegativeOracleResult fd_oracle_negative(double mu, double L, int points,
                                        int count, const OscillatorParams& p,
                                        const OrderingMeans& means);

/// Coefficients of phi'' = (q phi' + r phi) / p.
struct OdeCoefficients {
  std::function<double(double)> p;
  std::function<double(double)> q;
  std::function<double(double)> r;
};

struct OdeSolution {
  Eigen::VectorXd z;
  Eigen::VectorXd value;
  Eigen::VectorXd derivative;
};

/// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) integration from
/// (z0, phi0, dphi0), stepping exactly onto each requested output point.
/// z_out must be monotone on one side of z0.
OdeSolution ode_solve_second_order(const OdeCoefficients& coeffs, double z0,
                                   double phi0, double dphi0,
                                   const Eigen::VectorXd& z_out,
                                   double rel_tol = 1e-10);

/// Evaluates psi at a batch of points; implementations must produce values
/// whose errors vary smoothly along the batch (single-trajectory rule for
/// ODE-backed states) so that finite differencing stays meaningful.
using BatchEvaluator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Max |H psi - E psi| over the samples, normalized by max |psi|, with both
/// derivatives taken by central differences of step h (default
/// 1e-5 * sample range).  Samples must keep >= 10 h away from the mass poles.
double residual_schrodinger(const BatchEvaluator& psi, double energy,
                            const OscillatorParams& p,
                            const OrderingMeans& means,
                            const Eigen::VectorXd& samples, double h = 0.0);

}  // namespace mlosc
