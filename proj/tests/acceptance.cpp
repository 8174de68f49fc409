// Acceptance suite: every closed-form result, oracle agreement, identity and
// property gate at its pinned tolerance, one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mlosc/numerics.hpp"
#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"
#include "mlosc/spectra.hpp"
#include "mlosc/verify.hpp"

using namespace mlosc;

namespace {

int failures = 0;

void record(int criterion, const std::string& label, double max_err,
            double tolerance) {
  const bool ok = max_err <= tolerance;
  if (!ok) {
    ++failures;
  }
  std::printf("%s  criterion %2d  %-58s (max_err=%.3e, tol=%.1e)\n",
              ok ? "PASS" : "FAIL", criterion, label.c_str(), max_err,
              tolerance);
}

void record_flag(int criterion, const std::string& label, bool ok) {
  if (!ok) {
    ++failures;
  }
  std::printf("%s  criterion %2d  %-58s\n", ok ? "PASS" : "FAIL", criterion,
              label.c_str());
}

const OrderingMeans kML{-0.5, -0.5, 0.0};
const OrderingMeans kBDD{0.0, 0.0, 0.0};
const OrderingMeans kCarinena{-0.5, 0.0, 0.0};

double spectrum_error(const BoundSpectrum& spectrum,
                      const std::vector<double>& expected) {
  double err = 0.0;
  for (std::size_t n = 0; n < expected.size(); ++n) {
    err = std::max(err, std::abs(spectrum.levels[n].E - expected[n]));
  }
  return err;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const OscillatorParams p(1.0, 1.0, 1.0);
  record(1, "ML closed-form spectrum {1, 3, 6, 10}",
         spectrum_error(bound_spectrum_positive(p, kML, 3), {1.0, 3.0, 6.0, 10.0}),
         1e-12);
  const VerificationReport oracle = check_spectrum_vs_oracle(
      p, kML, 3, FDGrid{-1.0, 1.0, 4000, 1e-6});
  record(1, "ML spectrum vs FD oracle (eps=1e-6, 4000 pts)", oracle.max_error,
         1e-3);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  record(1, "ML criterion runtime below 5 s", seconds, 5.0);
}

void criterion_2() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  record(2, "BenDaniel-Duke closed-form spectrum {0.5, 2.5, 5.5}",
         spectrum_error(bound_spectrum_positive(p, kBDD, 2), {0.5, 2.5, 5.5}),
         1e-12);
  record(2, "BenDaniel-Duke spectrum vs FD oracle",
         check_spectrum_vs_oracle(p, kBDD, 3, FDGrid{-1.0, 1.0, 4000, 1e-6})
             .max_error,
         1e-3);
}

void criterion_3() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const BoundSpectrum s = bound_spectrum_positive(p, kCarinena, 1);
  const double err = std::max(std::abs(s.levels[0].E - 0.80901699),
                              std::abs(s.levels[1].E - 2.92705098));
  record(3, "Carinena spectrum E0, E1 (d~ = sqrt(1.25))", err, 1e-8);
  record(3, "Carinena spectrum vs FD oracle",
         check_spectrum_vs_oracle(p, kCarinena, 3,
                                  FDGrid{-1.0, 1.0, 4000, 1e-6})
             .max_error,
         1e-3);
}

void criterion_4() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  record(4, "ML 6x6 Gram matrix vs identity (order-256 quadrature)",
         check_orthonormality_positive(p, kML, 6, 256).max_error, 1e-8);
  record(4, "Carinena 6x6 Gram matrix vs identity",
         check_orthonormality_positive(p, kCarinena, 6, 256).max_error, 1e-6);
}

void criterion_5() {
  const VerificationReport jacobi = check_jacobi_relation({0.5, 1.0, 2.5}, 10, 101);
  record(5, "Jacobi relation (sign-corrected), n <= 10", jacobi.max_error,
         1e-10);
  record(5, "Rodrigues evaluation, n <= 8",
         check_rodrigues({0.5, 1.0, 2.5}, 8, 41).max_error, 1e-9);
  const bool documented =
      jacobi.details.at("alternating_sign_odd_mismatch") > 0.01 &&
      std::abs(jacobi.details.at("alternating_sign_odd_mean_ratio") + 1.0) <= 1e-9;
  record_flag(5, "alternating-sign variant fails on every odd n (ratio -1)",
              documented);
}

void criterion_6() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const VerificationReport report = check_lambda_hermite(p, kML, 4);
  record(6, "deformed-Hermite residual on P_n^(mu,mu), n <= 4",
         report.details.at("residual_max"), 1e-8);
  record(6, "deformed-Hermite eigenvalues match the main spectrum",
         report.details.at("energy_max_error"), 1e-12);
}

void criterion_7() {
  const OscillatorParams p(22.09, -1.0, 1.0);
  const BoundSpectrum s = bound_spectrum_negative(p, kML);
  record_flag(7, "mu = 4.7 fixture yields exactly 5 bound levels",
              s.levels.size() == 5);
  record(7, "mu = 4.7 closed-form E0..E2 = {1.85, 5.55, 8.25}",
         spectrum_error(s, {1.85, 5.55, 8.25}), 1e-12);
  record(7, "mu = 4.7 spectrum vs FD oracle (L=40, 8000 pts)",
         check_spectrum_vs_oracle(p, kML, 3, FDGrid{-40.0, 40.0, 8000, 0.0})
             .max_error,
         1e-3);
}

void criterion_8() {
  const OscillatorParams p(25.0, -1.0, 1.0);
  record(8, "mu = 5 closed-form spectrum {2, 6, 9, 11, 12}",
         spectrum_error(bound_spectrum_negative(p, kML),
                        {2.0, 6.0, 9.0, 11.0, 12.0}),
         1e-12);
  const double n0 = eigenstate_negative(0, p, kML).normalization();
  record(8, "mu = 5 ground-state normalization sqrt(128/(35 pi))",
         std::abs(n0 - std::sqrt(128.0 / (35.0 * M_PI))), 1e-8);
}

void criterion_9() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const double e0 = continuum_energy(0.0, p, kML).E;
  const double e1 = continuum_energy(1.0, p, kML).E;
  record(9, "continuum energies E(0) = -1/8, E(1) = -5/8",
         std::max(std::abs(e0 + 0.125), std::abs(e1 + 0.625)), 1e-12);

  const ContinuumWavefunction state =
      eigenstate_continuum(0.5, p, kML, Branch::Region3);
  Eigen::VectorXd samples(40);
  for (int i = 0; i < 40; ++i) {
    samples[i] = 1.05 + (5.0 - 1.05) * i / 39.0;
  }
  const BatchEvaluator psi = [&state](const Eigen::VectorXd& xs) {
    return state.values(xs);
  };
  record(9, "continuum Schrodinger residual on [1.05, 5]",
         residual_schrodinger(psi, state.state().E, p, kML, samples), 1e-5);

  Eigen::VectorXd zs(3);
  zs << 1.0 + 2e-4, 1.0 + 4e-4, 1.0 + 8e-4;
  const Eigen::VectorXd phi = conical_legendre_samples(0.5, 1.0, zs);
  const double slope = std::log(phi[2] / phi[0]) /
                       std::log((zs[2] * zs[2] - 1.0) / (zs[0] * zs[0] - 1.0));
  record(9, "conical leading-exponent fit mu/2 near z = 1",
         std::abs(slope - 0.5), 1e-2);
}

void criterion_10() {
  const OscillatorParams p(1.0, 1e-6, 1.0);
  const BoundSpectrum s = bound_spectrum_positive(p, kML, 5);
  double err = 0.0;
  for (int n = 0; n <= 5; ++n) {
    err = std::max(err, std::abs(s.levels[n].E - (n + 0.5)));
  }
  record(10, "harmonic limit at lambda = 1e-6, n <= 5", err, 1e-4);
}

void criterion_11() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const OrderingMeans means = derived_means(
      make_ordering({{0.5, 2.0, -2.0, -1.0}, {0.5, -2.0, 0.0, 1.0}}));
  bool imaginary = false;
  double radicand = 0.0;
  try {
    spectral_params(p, means);
  } catch (const ImaginaryMu& e) {
    imaginary = true;
    radicand = e.radicand;
  }
  record_flag(11, "ordering with radicand -7 is rejected as imaginary mu",
              imaginary && std::abs(radicand + 7.0) <= 1e-12);
  record_flag(11, "means (0, -0.5, 0) flagged as singular eigenfunctions",
              classify_regularity(OrderingMeans{0.0, -0.5, 0.0}) ==
                  Regularity::SingularEigenfunctions);
}

void criterion_12() {
  const OscillatorParams p(1.0, 1.0, 1.0);
  const std::vector<VerificationReport> reports =
      run_all(p, kML, VerifyConfig{});
  const std::vector<std::string> required{
      "parity", "nu_reflection", "mean_combination", "quadrature_exactness",
      "fd_convergence"};
  for (const std::string& name : required) {
    bool found = false;
    bool passed = false;
    for (const VerificationReport& report : reports) {
      if (report.check_name == name) {
        found = true;
        passed = report.passed;
      }
    }
    record_flag(12, "run_all default suite passes " + name, found && passed);
  }
  bool all = true;
  for (const VerificationReport& report : reports) {
    all = all && report.passed;
  }
  record_flag(12, "run_all default suite passes in full", all);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("\nall acceptance criteria passed\n");
    return 0;
  }
  std::printf("\n%d acceptance check(s) failed\n", failures);
  return 1;
}
