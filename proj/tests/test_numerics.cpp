#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "mlosc/numerics.hpp"
#include "mlosc/spectra.hpp"

using namespace mlosc;

TEST_CASE("gauss_legendre low-order closed forms") {
  const QuadratureRule two = gauss_legendre(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(two.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

  const QuadratureRule three = gauss_legendre(3);
  CHECK(three.nodes[1] == doctest::Approx(0.0));
  CHECK(three.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-14));
  CHECK(three.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK(three.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_legendre(0), BadParameters);
  CHECK_THROWS_AS(gauss_legendre(4096), BadParameters);
}

TEST_CASE("rule invariants across orders") {
  for (int order : {1, 2, 7, 33, 128}) {
    const QuadratureRule rule = gauss_legendre(order);
    CHECK(std::abs(rule.weights.sum() - 2.0) <= 1e-13);
    for (int i = 0; i + 1 < order; ++i) {
      CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    }
    for (int i = 0; i < order; ++i) {
      CHECK(std::abs(rule.nodes[i] + rule.nodes[order - 1 - i]) <= 1e-13);
    }
  }
}

TEST_CASE("quadrature exactness and basic integrals") {
  const QuadratureRule two = gauss_legendre(2);
  CHECK(integrate(two, [](double z) { return z * z; }, -1.0, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(integrate(two, [](double) { return 1.0; }, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-15));

  const QuadratureRule big = gauss_legendre(64);
  // Square of the lowest terminating Legendre profile at mu = 1.
  const double val = integrate(
      big, [](double z) { return 0.25 * (1.0 - z * z); }, -1.0, 1.0);
  CHECK(val == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      integrate(two, [](double z) { return std::log(z); }, -1.0, 1.0),
      NonFiniteSample);
}

TEST_CASE("real-line integration") {
  const double val = integrate_real_line(
      [](double x) { return std::pow(1.0 + x * x, -5.0); });
  CHECK(val == doctest::Approx(0.85902924121595909).epsilon(1e-10));

  // Slowly decaying tail (|x|^{-1.4} scale): the panel scheme must still
  // resolve it to high relative accuracy.
  const double slow = integrate_real_line(
      [](double x) { return std::pow(1.0 + x * x, -0.7); });
  // Closed form sqrt(pi) Gamma(0.2) / Gamma(0.7) for this Beta-type integral.
  const double expected = std::sqrt(M_PI) * std::tgamma(0.2) / std::tgamma(0.7);
  CHECK(slow == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("tridiagonal lowest eigenvalues") {
  Eigen::VectorXd diag2(2);
  diag2 << 2.0, 2.0;
  Eigen::VectorXd off2(1);
  off2 << -1.0;
  const Eigen::VectorXd v2 = tridiag_lowest_eigenvalues(diag2, off2, 2);
  CHECK(v2[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v2[1] == doctest::Approx(3.0).epsilon(1e-12));

  Eigen::VectorXd diag3(3);
  diag3 << 1.0, 2.0, 3.0;
  Eigen::VectorXd off3 = Eigen::VectorXd::Zero(2);
  const Eigen::VectorXd v3 = tridiag_lowest_eigenvalues(diag3, off3, 3);
  CHECK(v3[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v3[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(v3[2] == doctest::Approx(3.0).epsilon(1e-12));

  Eigen::VectorXd diagc = Eigen::VectorXd::Constant(3, 2.0);
  Eigen::VectorXd offc = Eigen::VectorXd::Constant(2, -1.0);
  const Eigen::VectorXd vc = tridiag_lowest_eigenvalues(diagc, offc, 3);
  CHECK(vc[0] == doctest::Approx(0.58578643762690495).epsilon(1e-12));
  CHECK(vc[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vc[2] == doctest::Approx(3.414213562373095).epsilon(1e-12));

  Eigen::VectorXd bad_off(3);
  CHECK_THROWS_AS(tridiag_lowest_eigenvalues(diag3, bad_off, 1),
                  DimensionMismatch);
  CHECK_THROWS_AS(tridiag_lowest_eigenvalues(diag3, off3, 5),
                  DimensionMismatch);
}

TEST_CASE("Sturm counts agree with a dense eigensolver") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + trial % 5;
    Eigen::VectorXd diag(dim), off(dim - 1);
    for (int i = 0; i < dim; ++i) diag[i] = dist(rng);
    for (int i = 0; i < dim - 1; ++i) off[i] = dist(rng);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) dense(i, i) = diag[i];
    for (int i = 0; i < dim - 1; ++i) {
      dense(i, i + 1) = off[i];
      dense(i + 1, i) = off[i];
    }
    const Eigen::VectorXd evs =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues();
    for (double shift : {-1.5, -0.2, 0.4, 1.9}) {
      int expected = 0;
      for (int i = 0; i < dim; ++i) {
        if (evs[i] < shift) ++expected;
      }
      CHECK(tridiag_count_below(diag, off, shift) == expected);
    }
  }
}

TEST_CASE("positive finite-difference oracle") {
  const FDGrid grid{-1.0, 1.0, 4000, 1e-6};
  const Eigen::VectorXd lam = fd_oracle_positive(1.0, grid, 3);
  CHECK(std::abs(lam[0] - 2.0) / 2.0 <= 1e-3);
  CHECK(std::abs(lam[1] - 6.0) / 6.0 <= 1e-3);
  CHECK(std::abs(lam[2] - 12.0) / 12.0 <= 1e-3);

  const double mu = std::sqrt(5.0) / 2.0;
  const Eigen::VectorXd lam2 = fd_oracle_positive(mu, grid, 1);
  CHECK(std::abs(lam2[0] - 2.3680339887498948) / 2.3680339887498948 <= 1e-3);

  CHECK_THROWS_AS(fd_oracle_positive(1.0, FDGrid{-1.0, 1.0, 8, 1e-6}, 1),
                  BadParameters);
  CHECK_THROWS_AS(fd_oracle_positive(1.0, FDGrid{-1.0, 1.0, 100, 0.0}, 1),
                  BadParameters);
}

TEST_CASE("positive oracle refines at second order on smooth eigenfunctions") {
  const double mu = 2.5;
  const double exact = mu * (mu + 1.0);
  double errs[2];
  int pts[2] = {1000, 2000};
  for (int i = 0; i < 2; ++i) {
    const Eigen::VectorXd lam =
        fd_oracle_positive(mu, FDGrid{-1.0, 1.0, pts[i], 1e-6}, 1);
    errs[i] = std::abs(lam[0] - exact);
  }
  const double ratio = errs[0] / errs[1];
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
}

TEST_CASE("mu = 1 eigenfunctions cap the oracle at first order") {
  // (1-z^2)^{1/2} endpoint behaviour dominates the eigenvalue error, so
  // halving h halves the error instead of quartering it; the absolute
  // accuracy at the production grids still meets the 1e-3 budget.
  double errs[2];
  int pts[2] = {1000, 2000};
  for (int i = 0; i < 2; ++i) {
    const Eigen::VectorXd lam =
        fd_oracle_positive(1.0, FDGrid{-1.0, 1.0, pts[i], 1e-6}, 1);
    errs[i] = std::abs(lam[0] - 2.0);
  }
  const double ratio = errs[0] / errs[1];
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.2);
}

TEST_CASE("negative finite-difference oracle") {
  const OrderingMeans ml{-0.5, -0.5, 0.0};

  const OscillatorParams p47(22.09, -1.0, 1.0);
  const NegativeOracleResult r47 = fd_oracle_negative(4.7, 40.0, 8000, 3, p47, ml);
  CHECK(std::abs(r47.energies[0] - 1.85) / 1.85 <= 1e-3);
  CHECK(std::abs(r47.energies[1] - 5.55) / 5.55 <= 1e-3);
  CHECK(std::abs(r47.energies[2] - 8.25) / 8.25 <= 1e-3);
  CHECK(r47.bound[0]);
  CHECK(r47.bound[2]);

  const OscillatorParams p5(25.0, -1.0, 1.0);
  const NegativeOracleResult r5 = fd_oracle_negative(5.0, 40.0, 8000, 1, p5, ml);
  CHECK(std::abs(r5.energies[0] - 2.0) / 2.0 <= 1e-3);

  // Levels past the finite bound window are box artifacts and must be
  // flagged as such.
  const NegativeOracleResult r_extra =
      fd_oracle_negative(4.7, 40.0, 4000, 7, p47, ml);
  CHECK(r_extra.bound[4]);
  CHECK_FALSE(r_extra.bound[5]);
  CHECK_FALSE(r_extra.bound[6]);

  CHECK_THROWS_AS(
      fd_oracle_negative(4.7, 40.0, 8000, 1, OscillatorParams(1.0, 1.0, 1.0), ml),
      WrongRegime);
}

TEST_CASE("second-order ODE integration fixtures") {
  OdeCoefficients sine;
  sine.p = [](double) { return 1.0; };
  sine.q = [](double) { return 0.0; };
  sine.r = [](double) { return -1.0; };
  Eigen::VectorXd target(1);
  target << M_PI / 2.0;
  const OdeSolution s = ode_solve_second_order(sine, 0.0, 0.0, 1.0, target);
  CHECK(std::abs(s.value[0] - 1.0) <= 1e-9);

  OdeCoefficients expo;
  expo.p = [](double) { return 1.0; };
  expo.q = [](double) { return 0.0; };
  expo.r = [](double) { return 1.0; };
  Eigen::VectorXd one(1);
  one << 1.0;
  const OdeSolution sh = ode_solve_second_order(expo, 0.0, 0.0, 1.0, one);
  CHECK(std::abs(sh.value[0] - std::sinh(1.0)) <= 1e-9);
}

TEST_CASE("ODE reproduces an exact Legendre profile") {
  // nu = 2, mu = 1: phi(z) = (z/2) sqrt(1-z^2) (up to scale) solves the
  // Legendre equation; launch with its exact data at z = 0.
  OdeCoefficients legendre;
  legendre.p = [](double z) { return 1.0 - z * z; };
  legendre.q = [](double z) { return 2.0 * z; };
  legendre.r = [](double z) { return 1.0 / (1.0 - z * z) - 6.0; };
  const int count = 10;
  Eigen::VectorXd zs(count);
  for (int i = 0; i < count; ++i) {
    zs[i] = 0.09 + (0.9 - 0.09) * i / (count - 1.0);
  }
  const OdeSolution sol = ode_solve_second_order(legendre, 0.0, 0.0, 0.5, zs);
  for (int i = 0; i < count; ++i) {
    const double z = zs[i];
    const double exact = 0.5 * z * std::sqrt(1.0 - z * z);
    CHECK(std::abs(sol.value[i] - exact) <= 1e-8);
  }
}

TEST_CASE("ODE error scales with the tolerance") {
  OdeCoefficients sine;
  sine.p = [](double) { return 1.0; };
  sine.q = [](double) { return 0.0; };
  sine.r = [](double) { return -1.0; };
  Eigen::VectorXd target(1);
  target << 10.0;
  double errors[2];
  const double tols[2] = {1e-6, 1e-10};
  for (int i = 0; i < 2; ++i) {
    const OdeSolution s =
        ode_solve_second_order(sine, 0.0, 0.0, 1.0, target, tols[i]);
    errors[i] = std::abs(s.value[0] - std::sin(10.0));
  }
  CHECK(errors[1] < errors[0]);
  CHECK(errors[0] <= 100.0 * (tols[0] / tols[1]) * std::max(errors[1], 1e-16));
}

TEST_CASE("Schrodinger residual on an exact eigenstate") {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const OrderingMeans ml{-0.5, -0.5, 0.0};
  const Eigenstate state = eigenstate_positive(0, p, ml);
  Eigen::VectorXd samples(81);
  for (int i = 0; i < 81; ++i) {
    samples[i] = -0.9 + 1.8 * i / 80.0;
  }
  const BatchEvaluator psi = [&state](const Eigen::VectorXd& xs) {
    return state.values(xs);
  };
  const double at_energy = residual_schrodinger(psi, 1.0, p, ml, samples);
  CHECK(at_energy <= 1e-6);

  // For an exact eigenfunction the residual at a shifted energy is exactly
  // the shift times |psi|/max|psi|, so its maximum is the shift itself.
  const double shifted = residual_schrodinger(psi, 1.1, p, ml, samples);
  CHECK(shifted == doctest::Approx(0.1).epsilon(2e-3));
}

TEST_CASE("residual rejects samples hugging the poles") {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const OrderingMeans ml{-0.5, -0.5, 0.0};
  const Eigenstate state = eigenstate_positive(0, p, ml);
  Eigen::VectorXd samples(1);
  samples << 0.9999999;
  const BatchEvaluator psi = [&state](const Eigen::VectorXd& xs) {
    return state.values(xs);
  };
  CHECK_THROWS_AS(residual_schrodinger(psi, 1.0, p, ml, samples, 1e-5),
                  BadParameters);
}
