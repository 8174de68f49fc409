#include "mlosc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mlosc/numerics.hpp"

namespace mlosc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// sin(pi x) with argument reduction, exact at integers.
double sin_pi(double x) {
  double r = x - std::floor(x);  // in [0, 1)
  const long long whole = static_cast<long long>(std::floor(x));
  double s;
  if (r <= 0.5) {
    s = std::sin(kPi * r);
  } else {
    s = std::sin(kPi * (1.0 - r));
  }
  return (whole % 2 == 0) ? s : -s;
}

double log_gamma_positive(double x) {
  // x >= 0.5
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    series += kLanczos[i] / (z + i);
  }
  const double t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

PolySpec::PolySpec(int n, double mu, LegendreVariant variant)
    : n(n), mu(mu), variant(variant) {
  if (n < 0 || !(mu > -1.0)) {
    throw BadParameters("PolySpec requires n >= 0 and mu > -1");
  }
}

double legendre_profile(const PolySpec& spec, double arg) {
  return spec.variant == LegendreVariant::RealInterval
             ? legendre_nonint_poly(spec.n, spec.mu, arg)
             : legendre_imag_gegenbauer(spec.n, spec.mu, arg);
}

LogGamma log_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    std::ostringstream msg;
    msg << "Gamma pole at x = " << x;
    throw PoleAtNonPositiveInteger(msg.str());
  }
  if (x >= 0.5) {
    return LogGamma{log_gamma_positive(x), +1};
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); 1-x >= 0.5.
  const double s = sin_pi(x);
  const double log_abs =
      std::log(kPi) - std::log(std::abs(s)) - log_gamma_positive(1.0 - x);
  return LogGamma{log_abs, s > 0.0 ? +1 : -1};
}

double gamma_value(double x) {
  const LogGamma lg = log_gamma(x);
  return lg.sign * std::exp(lg.log_abs);
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    return 0.0;
  }
  const LogGamma lg = log_gamma(x);
  return lg.sign * std::exp(-lg.log_abs);
}

double pochhammer(double a, int n) {
  if (n < 0) {
    throw BadParameters("pochhammer order must be non-negative");
  }
  double result = 1.0;
  for (int i = 0; i < n; ++i) {
    result *= a + i;
  }
  return result;
}

double hyp2f1_terminating(int n, double b, double c, double z) {
  if (n < 0) {
    throw BadParameters("terminating series requires a = -n with n >= 0");
  }
  if (n >= 1 && is_nonpositive_integer(c) && c > -static_cast<double>(n)) {
    throw BadParameters("c hits a non-positive integer inside the sum");
  }
  const double a = -static_cast<double>(n);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

double hyp2f1_series(double a, double b, double c, double z) {
  if (std::abs(z) > 0.9) {
    throw BadParameters("hyp2f1_series working range is |z| <= 0.9");
  }
  if (is_nonpositive_integer(c)) {
    throw BadParameters("c must not be a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) < 1e-15 * std::abs(sum)) {
      return sum;
    }
  }
  throw NoConvergence("hyp2f1_series did not converge in 10000 terms");
}

double jacobi_poly(int n, double a, double b, double z) {
  if (n < 0) {
    throw BadParameters("polynomial order must be non-negative");
  }
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 0.5 * ((a - b) + (a + b + 2.0) * z);
  for (int m = 2; m <= n; ++m) {
    const double apb = a + b;
    const double c1 = 2.0 * m * (m + apb) * (2.0 * m + apb - 2.0);
    const double c2 = (2.0 * m + apb - 1.0) *
                      ((2.0 * m + apb) * (2.0 * m + apb - 2.0) * z + a * a - b * b);
    const double c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + apb);
    const double next = (c2 * curr - c3 * prev) / c1;
    prev = curr;
    curr = next;
  }
  return curr;
}

double jacobi_poly_derivative(int n, double a, double b, double z) {
  if (n == 0) {
    return 0.0;
  }
  return 0.5 * (n + a + b + 1.0) * jacobi_poly(n - 1, a + 1.0, b + 1.0, z);
}

double jacobi_poly_second_derivative(int n, double a, double b, double z) {
  if (n < 2) {
    return 0.0;
  }
  return 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0) *
         jacobi_poly(n - 2, a + 2.0, b + 2.0, z);
}

double gegenbauer_poly(int n, double alpha, double z) {
  if (n < 0) {
    throw BadParameters("polynomial order must be non-negative");
  }
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 2.0 * alpha * z;
  for (int m = 2; m <= n; ++m) {
    const double next =
        (2.0 * (m + alpha - 1.0) * z * curr - (m + 2.0 * alpha - 2.0) * prev) / m;
    prev = curr;
    curr = next;
  }
  return curr;
}

double legendre_nonint_poly(int n, double mu, double z) {
  if (n < 0 || !(mu > -1.0)) {
    throw BadParameters("requires n >= 0 and mu > -1");
  }
  if (std::abs(z) > 1.0) {
    throw BadParameters("argument must lie in [-1, 1]");
  }
  const double u = (1.0 - z) * (1.0 + z);
  if (u == 0.0 && mu > 0.0) {
    return 0.0;  // (1-z^2)^{mu/2} kills the value at the ends
  }
  const double half_n = 0.5 * n;
  if (n % 2 == 0) {
    const LogGamma g1 = log_gamma(0.5 - half_n);
    const LogGamma g2 = log_gamma(1.0 + half_n + mu);
    const double log_coef =
        -mu * std::log(2.0) + 0.5 * std::log(kPi) - g1.log_abs - g2.log_abs;
    const double coef = g1.sign * g2.sign * std::exp(log_coef);
    return coef * std::pow(u, 0.5 * mu) *
           hyp2f1_terminating(n / 2, 0.5 + half_n + mu, 0.5, z * z);
  }
  const LogGamma g1 = log_gamma(0.5 + half_n + mu);
  const LogGamma g2 = log_gamma(-half_n);
  const double log_coef =
      -mu * std::log(2.0) + 0.5 * std::log(kPi) - g1.log_abs - g2.log_abs;
  const double coef = g1.sign * g2.sign * std::exp(log_coef) * (-2.0 * z);
  return coef * std::pow(u, 0.5 * mu) *
         hyp2f1_terminating((n - 1) / 2, 1.0 + half_n + mu, 1.5, z * z);
}

double legendre_nonint_via_jacobi(int n, double mu, double z) {
  if (n < 0 || !(mu > -1.0)) {
    throw BadParameters("requires n >= 0 and mu > -1");
  }
  const double u = (1.0 - z) * (1.0 + z);
  const double log_coef = -mu * std::log(2.0) + log_gamma(n + 1.0).log_abs -
                          log_gamma(n + mu + 1.0).log_abs;
  return std::exp(log_coef) * std::pow(u, 0.5 * mu) * jacobi_poly(n, mu, mu, z);
}

double legendre_series_general(double nu, double mu, double z) {
  if (std::abs(z) > 0.9) {
    throw BadParameters("legendre_series_general working range is |z| <= 0.9");
  }
  const double z2 = z * z;
  const double half_nu = 0.5 * nu;
  const double half_mu = 0.5 * mu;

  // First bracket: F((mu-nu)/2, (1+nu+mu)/2; 1/2; z^2) with reciprocal-gamma
  // coefficient; a gamma pole in the denominator zeroes the whole bracket.
  double first = 0.0;
  const double rg1 = reciprocal_gamma(0.5 - half_nu + half_mu) *
                     reciprocal_gamma(1.0 + half_nu + half_mu);
  if (rg1 != 0.0) {
    first = rg1 * hyp2f1_series(half_mu - half_nu, 0.5 + half_nu + half_mu,
                                0.5, z2);
  }

  double second = 0.0;
  const double rg2 = reciprocal_gamma(0.5 + half_nu + half_mu) *
                     reciprocal_gamma(half_mu - half_nu);
  if (rg2 != 0.0) {
    second = -2.0 * z * rg2 *
             hyp2f1_series(0.5 - half_nu + half_mu, 1.0 + half_nu + half_mu,
                           1.5, z2);
  }

  return std::pow(2.0, -mu) * std::sqrt(kPi) *
         std::pow((1.0 - z) * (1.0 + z), 0.5 * mu) * (first + second);
}

double legendre_imag_gegenbauer(int n, double mu, double y) {
  if (n < 0) {
    throw BadParameters("order must be non-negative");
  }
  const double w = 1.0 + y * y;
  return std::pow(w, 0.5 * (n - mu)) *
         gegenbauer_poly(n, mu - n, y / std::sqrt(w));
}

namespace {

// Two-term Frobenius expansion phi = (z^2-1)^{mu/2} (1 + c1 (z-1) + ...)
// about the regular singular point z = 1.
double frobenius_c1(double rho, double mu) {
  const double lam = -0.25 - rho * rho;  // nu(nu+1)
  return (lam - mu * (mu + 1.0)) / (2.0 * mu + 2.0);
}

double frobenius_value(double rho, double mu, double z) {
  return std::pow(z * z - 1.0, 0.5 * mu) * (1.0 + frobenius_c1(rho, mu) * (z - 1.0));
}

}  // namespace

Eigen::VectorXd conical_legendre_samples(double rho, double mu,
                                         const Eigen::VectorXd& zs,
                                         const ConicalOptions& opts) {
  if (!(mu > 0.0)) {
    throw BadParameters("conical evaluation requires mu > 0");
  }
  const Eigen::Index count = zs.size();
  Eigen::VectorXd out(count);
  Eigen::Index first_ode = count;
  for (Eigen::Index i = 0; i < count; ++i) {
    if (!(zs[i] > 1.0) || zs[i] > opts.z_max) {
      throw BadParameters("conical argument must lie in (1, z_max]");
    }
    if (i > 0 && !(zs[i] > zs[i - 1])) {
      throw BadParameters("sample points must be strictly ascending");
    }
    if (zs[i] <= opts.z_start) {
      out[i] = frobenius_value(rho, mu, zs[i]);
    } else if (first_ode == count) {
      first_ode = i;
    }
  }
  if (first_ode == count) {
    return out;
  }

  const double lam = -0.25 - rho * rho;
  OdeCoefficients coeffs;
  coeffs.p = [](double z) { return (1.0 - z) * (1.0 + z); };
  coeffs.q = [](double z) { return 2.0 * z; };
  coeffs.r = [mu, lam](double z) {
    return mu * mu / ((1.0 - z) * (1.0 + z)) - lam;
  };

  const double z0 = opts.z_start;
  const double w0 = z0 * z0 - 1.0;
  const double c1 = frobenius_c1(rho, mu);
  const double g0 = 1.0 + c1 * (z0 - 1.0);
  const double phi0 = std::pow(w0, 0.5 * mu) * g0;
  const double dphi0 =
      mu * z0 * std::pow(w0, 0.5 * mu - 1.0) * g0 + std::pow(w0, 0.5 * mu) * c1;

  const OdeSolution sol = ode_solve_second_order(
      coeffs, z0, phi0, dphi0, zs.segment(first_ode, count - first_ode),
      opts.rel_tol);
  out.segment(first_ode, count - first_ode) = sol.value;
  return out;
}

double conical_legendre(double rho, double mu, double z,
                        const ConicalOptions& opts) {
  Eigen::VectorXd zs(1);
  zs[0] = z;
  return conical_legendre_samples(rho, mu, zs, opts)[0];
}

double rodrigues_eval(int n, double mu, double z) {
  if (n < 0 || !(mu > -1.0)) {
    throw BadParameters("requires n >= 0 and mu > -1");
  }
  if (!(std::abs(z) < 1.0)) {
    throw BadParameters("argument must lie in (-1, 1)");
  }
  // Leibniz expansion of d^n/dz^n [(1-z)^s (1+z)^s], s = n + mu, with
  // closed-form falling factors; no numerical differentiation.
  const double s = n + mu;
  const double om = 1.0 - z;
  const double op = 1.0 + z;
  double binom = 1.0;
  double deriv = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double fall_k = pochhammer(s - k + 1.0, k);
    const double fall_nk = pochhammer(s - (n - k) + 1.0, n - k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    deriv += binom * sign * fall_k * fall_nk * std::pow(om, s - k) *
             std::pow(op, s - (n - k));
    binom *= static_cast<double>(n - k) / (k + 1.0);
  }
  const double front = ((n % 2 == 0) ? 1.0 : -1.0) /
                       (std::pow(2.0, n + mu) * gamma_value(n + mu + 1.0));
  return front * std::pow(om * op, -0.5 * mu) * deriv;
}

}  // namespace mlosc
