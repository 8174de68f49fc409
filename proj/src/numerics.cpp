#include "mlosc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mlosc {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > 2048) {
    throw BadParameters("quadrature order must lie in [1, 2048]");
  }
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess for the i-th root (descending branch).
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_order(x) and its derivative.
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NoConvergence("Gauss-Legendre Newton iteration stalled");
    }
    if (2 * i + 1 == order) {
      x = 0.0;  // middle node of an odd rule is exact
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(mid + half * rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw NonFiniteSample("integrand non-finite at a quadrature node");
    }
    sum += rule.weights[i] * v;
  }
  return sum * half;
}

double integrate_real_line(const std::function<double(double)>& f,
                           int panel_order, double rel_tol) {
  const QuadratureRule rule = gauss_legendre(panel_order);
  double total = integrate(rule, f, -1.0, 1.0);
  int quiet_panels = 0;
  double a = 1.0;
  for (int j = 0; j < 400; ++j) {
    const double b = 2.0 * a;
    const double s = integrate(rule, f, a, b) +
                     integrate(rule, f, -b, -a);
    total += s;
    const double scale = std::max(std::abs(total), 1e-300);
    if (std::abs(s) <= rel_tol * scale) {
      if (++quiet_panels >= 2) {
        return total;
      }
    } else {
      quiet_panels = 0;
    }
    a = b;
  }
  throw NoConvergence("real-line panels did not decay; integrand tail too fat");
}

int tridiag_count_below(const Eigen::VectorXd& diag,
                        const Eigen::VectorXd& offdiag, double shift) {
  if (offdiag.size() != diag.size() - 1) {
    throw DimensionMismatch("offdiag length must be diag length - 1");
  }
  // Sturm sequence via the LDL^T pivots; negative pivots count eigenvalues
  // below the shift.
  int count = 0;
  double q = diag[0] - shift;
  if (q < 0.0) ++count;
  for (Eigen::Index i = 1; i < diag.size(); ++i) {
    if (q == 0.0) {
      q = 1e-300;
    }
    q = (diag[i] - shift) - offdiag[i - 1] * offdiag[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

Eigen::VectorXd tridiag_lowest_eigenvalues(const Eigen::VectorXd& diag,
                                           const Eigen::VectorXd& offdiag,
                                           int count) {
  const Eigen::Index dim = diag.size();
  if (offdiag.size() != dim - 1) {
    throw DimensionMismatch("offdiag length must be diag length - 1");
  }
  if (count < 0 || count > dim) {
    throw DimensionMismatch("requested more eigenvalues than the dimension");
  }
  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dim; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i < dim - 1) r += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  Eigen::VectorXd values(count);
  double lower = lo;
  for (int k = 0; k < count; ++k) {
    double a = lower;
    double b = hi;
    for (int iter = 0; iter < 140; ++iter) {
      const double mid = 0.5 * (a + b);
      if (tridiag_count_below(diag, offdiag, mid) >= k + 1) {
        b = mid;
      } else {
        a = mid;
      }
      const double span = b - a;
      if (span <= 1e-14 * std::max({1.0, std::abs(a), std::abs(b)})) {
        break;
      }
    }
    values[k] = 0.5 * (a + b);
    lower = a;  // eigenvalues are returned in ascending order
  }
  return values;
}

Eigen::VectorXd fd_oracle_positive(double mu, const FDGrid& grid, int count) {
  if (grid.points < 16) {
    throw BadParameters("finite-difference grid needs at least 16 points");
  }
  if (!(grid.epsilon > 0.0)) {
    throw BadParameters("singular endpoints require a positive offset");
  }
  if (!(mu > 0.0)) {
    throw BadParameters("oracle requires mu > 0");
  }
  const double a = grid.a + grid.epsilon;
  const double b = grid.b - grid.epsilon;
  const int n = grid.points;
  const double h = (b - a) / (n + 1);
  const auto p = [](double z) { return (1.0 - z) * (1.0 + z); };
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n - 1);
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) {
    const double z = a + h * (i + 1);
    const double p_minus = p(z - 0.5 * h);
    const double p_plus = p(z + 0.5 * h);
    diag[i] = (p_minus + p_plus) * inv_h2 + mu * mu / p(z);
    if (i < n - 1) {
      off[i] = -p_plus * inv_h2;
    }
  }
  return tridiag_lowest_eigenvalues(diag, off, count);
}

NegativeOracleResult fd_oracle_negative(double mu, double L, int points,
                                        int count, const OscillatorParams& p,
                                        const OrderingMeans& means) {
  if (!(p.lambda < 0.0)) {
    throw WrongRegime("negative-lambda oracle requires lambda < 0");
  }
  if (points < 16) {
    throw BadParameters("finite-difference grid needs at least 16 points");
  }
  if (!(L > 0.0) || !(mu > 0.0)) {
    throw BadParameters("requires L > 0 and mu > 0");
  }
  const int n = points;
  const double h = 2.0 * L / (n + 1);
  const auto pf = [](double y) { return 1.0 + y * y; };
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n - 1);
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < n; ++i) {
    const double y = -L + h * (i + 1);
    diag[i] = (pf(y - 0.5 * h) + pf(y + 0.5 * h)) * inv_h2 - mu * mu / pf(y);
    if (i < n - 1) {
      off[i] = -pf(y + 0.5 * h) * inv_h2;
    }
  }
  const Eigen::VectorXd kappa = tridiag_lowest_eigenvalues(diag, off, count);

  NegativeOracleResult result;
  result.energies.resize(count);
  result.bound.resize(count);
  const double abs_lambda = std::abs(p.lambda);
  const double h2l = 0.5 * p.hbar * p.hbar * abs_lambda;
  // largest integer N with mu > N + 1/2 (strict)
  const int n_cut = static_cast<int>(std::ceil(mu - 0.5)) - 1;
  for (int i = 0; i < count; ++i) {
    result.energies[i] =
        h2l * (mu * mu + means.gamma_bar + means.alpha_bar + kappa[i]);
    result.bound[i] = (i <= n_cut);
  }
  const int top = std::min(count - 1, n_cut);
  result.tail_warning = false;
  if (top >= 0) {
    const double tail = std::pow(1.0 + L * L, 0.5 * (top - mu));
    result.tail_warning = tail > 1e-8;
  }
  return result;
}

namespace {

struct Dopri5 {
  // Dormand-Prince 5(4) tableau.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b_hat (error weights)
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
};

}  // namespace

OdeSolution ode_solve_second_order(const OdeCoefficients& coeffs, double z0,
                                   double phi0, double dphi0,
                                   const Eigen::VectorXd& z_out,
                                   double rel_tol) {
  const Eigen::Index n_out = z_out.size();
  OdeSolution sol;
  sol.z = z_out;
  sol.value.resize(n_out);
  sol.derivative.resize(n_out);
  if (n_out == 0) {
    return sol;
  }
  const double dir = (z_out[n_out - 1] >= z0) ? 1.0 : -1.0;
  for (Eigen::Index i = 0; i < n_out; ++i) {
    if ((z_out[i] - z0) * dir < 0.0) {
      throw BadParameters("output points must lie on one side of z0");
    }
    if (i > 0 && (z_out[i] - z_out[i - 1]) * dir <= 0.0) {
      throw BadParameters("output points must be strictly monotone");
    }
  }

  const auto deriv = [&coeffs](double z, const Eigen::Vector2d& y) {
    const double pz = coeffs.p(z);
    if (pz == 0.0) {
      throw SingularCoefficient("leading ODE coefficient vanishes");
    }
    Eigen::Vector2d dy;
    dy[0] = y[1];
    dy[1] = (coeffs.q(z) * y[1] + coeffs.r(z) * y[0]) / pz;
    if (!dy.allFinite()) {
      throw IntegrationFailure("non-finite derivative encountered");
    }
    return dy;
  };

  double z = z0;
  Eigen::Vector2d y(phi0, dphi0);
  Eigen::Index out_idx = 0;
  while (out_idx < n_out && z_out[out_idx] == z0) {
    sol.value[out_idx] = y[0];
    sol.derivative[out_idx] = y[1];
    ++out_idx;
  }

  const double total_span = std::abs(z_out[n_out - 1] - z0);
  double h = dir * std::max(total_span * 1e-4, 1e-12);
  Eigen::Vector2d k1 = deriv(z, y);
  long steps = 0;
  while (out_idx < n_out) {
    if (++steps > 2000000) {
      throw IntegrationFailure("step budget exhausted");
    }
    bool clipped = false;
    double h_try = h;
    const double to_next = z_out[out_idx] - z;
    if (std::abs(h_try) >= std::abs(to_next)) {
      h_try = to_next;
      clipped = true;
    }
    if (std::abs(h_try) < 4.0 * std::numeric_limits<double>::epsilon() *
                              std::max(std::abs(z), 1.0)) {
      throw IntegrationFailure("step size underflow");
    }

    const Eigen::Vector2d k2 =
        deriv(z + Dopri5::c2 * h_try, y + h_try * (Dopri5::a21 * k1));
    const Eigen::Vector2d k3 = deriv(
        z + Dopri5::c3 * h_try, y + h_try * (Dopri5::a31 * k1 + Dopri5::a32 * k2));
    const Eigen::Vector2d k4 =
        deriv(z + Dopri5::c4 * h_try,
              y + h_try * (Dopri5::a41 * k1 + Dopri5::a42 * k2 + Dopri5::a43 * k3));
    const Eigen::Vector2d k5 =
        deriv(z + Dopri5::c5 * h_try,
              y + h_try * (Dopri5::a51 * k1 + Dopri5::a52 * k2 +
                           Dopri5::a53 * k3 + Dopri5::a54 * k4));
    const Eigen::Vector2d k6 =
        deriv(z + h_try, y + h_try * (Dopri5::a61 * k1 + Dopri5::a62 * k2 +
                                      Dopri5::a63 * k3 + Dopri5::a64 * k4 +
                                      Dopri5::a65 * k5));
    const Eigen::Vector2d y_new =
        y + h_try * (Dopri5::b1 * k1 + Dopri5::b3 * k3 + Dopri5::b4 * k4 +
                     Dopri5::b5 * k5 + Dopri5::b6 * k6);
    const Eigen::Vector2d k7 = deriv(z + h_try, y_new);
    const Eigen::Vector2d err_vec =
        h_try * (Dopri5::e1 * k1 + Dopri5::e3 * k3 + Dopri5::e4 * k4 +
                 Dopri5::e5 * k5 + Dopri5::e6 * k6 + Dopri5::e7 * k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale =
          1e-300 + rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(err_vec[i]) / scale);
    }

    if (err <= 1.0) {
      z += h_try;
      y = y_new;
      k1 = k7;  // FSAL
      if (clipped) {
        sol.value[out_idx] = y[0];
        sol.derivative[out_idx] = y[1];
        ++out_idx;
      }
      const double grow =
          (err == 0.0) ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
      if (!clipped) {
        h = h_try * grow;
      } else {
        h = dir * std::max(std::abs(h), std::abs(h_try) * grow);
      }
    } else {
      h = h_try * std::max(0.1, 0.9 * std::pow(err, -0.2));
    }
  }
  return sol;
}

double residual_schrodinger(const BatchEvaluator& psi, double energy,
                            const OscillatorParams& p,
                            const OrderingMeans& means,
                            const Eigen::VectorXd& samples, double h) {
  const Eigen::Index n = samples.size();
  if (n < 1) {
    throw BadParameters("at least one sample required");
  }
  if (h <= 0.0) {
    const double range = samples.maxCoeff() - samples.minCoeff();
    h = 1e-5 * (range > 0.0 ? range : 1.0);
  }
  if (p.lambda > 0.0) {
    const double xs = 1.0 / std::sqrt(p.lambda);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(std::abs(samples[i]) - xs) < 10.0 * h) {
        throw BadParameters("samples must keep >= 10 h away from the poles");
      }
    }
  }

  Eigen::VectorXd probes(3 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    probes[3 * i] = samples[i] - h;
    probes[3 * i + 1] = samples[i];
    probes[3 * i + 2] = samples[i] + h;
  }
  const Eigen::VectorXd v = psi(probes);
  if (v.size() != probes.size() || !v.allFinite()) {
    throw NonFiniteSample("wavefunction evaluation produced non-finite values");
  }

  const double h2 = p.hbar * p.hbar;
  double max_resid = 0.0;
  double max_psi = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = samples[i];
    const double vm = v[3 * i];
    const double v0 = v[3 * i + 1];
    const double vp = v[3 * i + 2];
    const double d2 = (vp - 2.0 * v0 + vm) / (h * h);
    const double d1 = (vp - vm) / (2.0 * h);
    const double lhs =
        -0.5 * h2 * (1.0 - p.lambda * x * x) * d2 -
        h2 * (means.gamma_bar - means.alpha_bar - 1.0) * p.lambda * x * d1 +
        effective_potential(x, p, means) * v0;
    max_resid = std::max(max_resid, std::abs(lhs - energy * v0));
    max_psi = std::max(max_psi, std::abs(v0));
  }
  if (max_psi == 0.0) {
    throw NonFiniteSample("wavefunction vanishes on every sample");
  }
  return max_resid / max_psi;
}

}  // namespace mlosc
