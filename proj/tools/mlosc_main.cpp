// Command-line surface for the general-ordered Mathews-Lakshmanan oscillator
// library: ordering catalog, spectra, wavefunction and potential sampling,
// verification suites, and finite-difference oracle runs.
//
// Exit codes: 0 success, 2 domain or verification failure, 3 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlosc/json_io.hpp"
#include "mlosc/numerics.hpp"
#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"
#include "mlosc/spectra.hpp"
#include "mlosc/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  double k = 1.0;
  double lambda = 1.0;
  double hbar = 1.0;
  std::string ordering_name;
  std::string ordering_file;
  std::string format = "json";
};

void add_param_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--k", opts->k, "Force constant k (> 0)");
  cmd->add_option("--lambda", opts->lambda, "Nonlinearity parameter lambda");
  cmd->add_option("--hbar", opts->hbar, "Planck constant (> 0)");
  cmd->add_option("--format", opts->format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_ordering_flags(CLI::App* cmd, CommonOptions* opts) {
  auto* by_name = cmd->add_option("--ordering", opts->ordering_name,
                                  "Named ordering scheme");
  auto* by_file = cmd->add_option("--ordering-file", opts->ordering_file,
                                  "Path to an ordering JSON file");
  by_name->excludes(by_file);
  by_file->excludes(by_name);
}

mlosc::Ordering resolve_ordering(const CommonOptions& opts) {
  const bool has_name = !opts.ordering_name.empty();
  const bool has_file = !opts.ordering_file.empty();
  if (has_name == has_file) {
    throw UsageError("exactly one of --ordering / --ordering-file is required");
  }
  if (has_name) {
    return mlosc::named_scheme(opts.ordering_name);
  }
  std::ifstream in(opts.ordering_file);
  if (!in) {
    throw UsageError("cannot open ordering file: " + opts.ordering_file);
  }
  nlohmann::json j;
  in >> j;
  return mlosc::ordering_from_json(j);
}

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

Eigen::VectorXd linspace(double a, double b, int count) {
  Eigen::VectorXd v(count);
  for (int i = 0; i < count; ++i) {
    v[i] = a + (b - a) * i / (count - 1.0);
  }
  return v;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- orderings

int run_orderings(const CommonOptions& opts) {
  nlohmann::json catalog = nlohmann::json::array();
  std::vector<std::array<std::string, 5>> rows;
  for (const std::string& name : mlosc::known_scheme_names()) {
    const mlosc::Ordering ordering = mlosc::named_scheme(name);
    const mlosc::OrderingMeans means = mlosc::derived_means(ordering);
    const bool hermitian =
        mlosc::classify_hermiticity(means) == mlosc::Hermiticity::Hermitian;
    nlohmann::json entry = mlosc::ordering_to_json(ordering);
    entry["means"] = {{"alpha_bar", means.alpha_bar},
                      {"gamma_bar", means.gamma_bar},
                      {"alphagamma_bar", means.alphagamma_bar}};
    entry["hermitian"] = hermitian;
    catalog.push_back(std::move(entry));
    rows.push_back({name, fmt(means.alpha_bar), fmt(means.gamma_bar),
                    fmt(means.alphagamma_bar), hermitian ? "true" : "false"});
  }
  if (opts.format == "json") {
    emit_json(catalog);
  } else {
    std::cout << "name,alpha_bar,gamma_bar,alphagamma_bar,hermitian\n";
    for (const auto& row : rows) {
      std::cout << row[0] << "," << row[1] << "," << row[2] << "," << row[3]
                << "," << row[4] << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ spectrum

int run_spectrum(const CommonOptions& opts, int levels) {
  if (levels < 1) {
    throw UsageError("--levels must be at least 1");
  }
  const mlosc::OscillatorParams p(opts.k, opts.lambda, opts.hbar);
  const mlosc::OrderingMeans means =
      mlosc::derived_means(resolve_ordering(opts));
  mlosc::BoundSpectrum spectrum;
  if (p.lambda > 0.0) {
    spectrum = mlosc::bound_spectrum_positive(p, means, levels - 1);
  } else if (p.lambda < 0.0) {
    spectrum = mlosc::bound_spectrum_negative(p, means);
    if (static_cast<int>(spectrum.levels.size()) > levels) {
      spectrum.levels.resize(levels);
    }
  } else {
    spectrum = mlosc::harmonic_spectrum(p, levels - 1);
  }
  if (opts.format == "json") {
    emit_json(mlosc::spectrum_to_json(spectrum));
  } else {
    std::cout << "n,nu,E\n";
    for (const mlosc::EnergyLevel& level : spectrum.levels) {
      std::cout << level.n << "," << fmt(level.nu) << "," << fmt(level.E)
                << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- wavefunction

struct WavefunctionOptions {
  int n = -1;
  double rho = std::numeric_limits<double>::quiet_NaN();
  std::string branch = "region3";
  double xmin = 0.0;
  double xmax = 0.0;
  int samples = 201;
  double z_max = 10.0;
};

int run_wavefunction(const CommonOptions& opts, const WavefunctionOptions& w,
                     bool has_n, bool has_rho) {
  if (has_n == has_rho) {
    throw UsageError("exactly one of --n / --rho is required");
  }
  if (w.samples < 2) {
    throw UsageError("--samples must be at least 2");
  }
  if (!(std::isfinite(w.xmin) && std::isfinite(w.xmax)) || !(w.xmin < w.xmax)) {
    throw UsageError("--xmin/--xmax must be finite with xmin < xmax");
  }
  const mlosc::OscillatorParams p(opts.k, opts.lambda, opts.hbar);
  const mlosc::OrderingMeans means =
      mlosc::derived_means(resolve_ordering(opts));

  double xmin = w.xmin;
  double xmax = w.xmax;
  bool clamped = false;
  double energy = 0.0;
  Eigen::VectorXd psi;

  if (has_n) {
    if (p.lambda == 0.0) {
      throw UsageError("bound wavefunctions require lambda != 0");
    }
    if (p.lambda > 0.0) {
      // Keep samples off the mass poles at +-1/sqrt(lambda).
      const double edge = (1.0 - 1e-9) / std::sqrt(p.lambda);
      if (xmin < -edge) { xmin = -edge; clamped = true; }
      if (xmax > edge) { xmax = edge; clamped = true; }
    }
    const mlosc::Eigenstate state =
        p.lambda > 0.0 ? mlosc::eigenstate_positive(w.n, p, means)
                       : mlosc::eigenstate_negative(w.n, p, means);
    const mlosc::BoundSpectrum spectrum =
        p.lambda > 0.0 ? mlosc::bound_spectrum_positive(p, means, w.n)
                       : mlosc::bound_spectrum_negative(p, means);
    energy = spectrum.levels[w.n].E;
    psi = state.values(linspace(xmin, xmax, w.samples));
  } else {
    mlosc::Branch branch = mlosc::Branch::Region3;
    if (w.branch == "region1") {
      branch = mlosc::Branch::Region1;
    } else if (w.branch != "region3") {
      throw UsageError("--branch must be region1 or region3");
    }
    mlosc::ConicalOptions copts;
    copts.z_max = w.z_max;
    const double sign = branch == mlosc::Branch::Region3 ? 1.0 : -1.0;
    const double sqrt_lambda = std::sqrt(p.lambda);  // lambda > 0 enforced below
    const mlosc::ContinuumWavefunction state =
        mlosc::eigenstate_continuum(w.rho, p, means, branch, copts);
    energy = state.state().E;
    // Clamp the branch-side end into the configured conical window.
    const double far_edge = sign * w.z_max / sqrt_lambda;
    if (branch == mlosc::Branch::Region3 && xmax > far_edge) {
      xmax = far_edge;
      clamped = true;
    }
    if (branch == mlosc::Branch::Region1 && xmin < far_edge) {
      xmin = far_edge;
      clamped = true;
    }
    psi = state.values(linspace(xmin, xmax, w.samples));
  }

  const Eigen::VectorXd xs = linspace(xmin, xmax, w.samples);
  if (opts.format == "json") {
    nlohmann::json j{{"params", mlosc::params_to_json(p)},
                     {"E", energy},
                     {"metadata",
                      {{"clamped", clamped}, {"xmin", xmin}, {"xmax", xmax}}}};
    if (has_n) {
      j["n"] = w.n;
    } else {
      j["rho"] = w.rho;
      j["branch"] = w.branch;
    }
    nlohmann::json xj = nlohmann::json::array();
    nlohmann::json pj = nlohmann::json::array();
    for (int i = 0; i < w.samples; ++i) {
      xj.push_back(xs[i]);
      pj.push_back(psi[i]);
    }
    j["x"] = std::move(xj);
    j["psi"] = std::move(pj);
    emit_json(j);
  } else {
    if (clamped) {
      std::cout << "# clamped range: xmin=" << fmt(xmin) << " xmax="
                << fmt(xmax) << "\n";
    }
    std::cout << "x,psi\n";
    for (int i = 0; i < w.samples; ++i) {
      std::cout << fmt(xs[i]) << "," << fmt(psi[i]) << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- potential

int run_potential(const CommonOptions& opts, double xmin, double xmax,
                  int samples) {
  if (samples < 2) {
    throw UsageError("--samples must be at least 2");
  }
  if (!(std::isfinite(xmin) && std::isfinite(xmax)) || !(xmin < xmax)) {
    throw UsageError("--xmin/--xmax must be finite with xmin < xmax");
  }
  const mlosc::OscillatorParams p(opts.k, opts.lambda, opts.hbar);
  const mlosc::OrderingMeans means =
      mlosc::derived_means(resolve_ordering(opts));
  bool clamped = false;
  if (p.lambda > 0.0) {
    const double edge = (1.0 - 1e-9) / std::sqrt(p.lambda);
    if (xmin < -edge) { xmin = -edge; clamped = true; }
    if (xmax > edge) { xmax = edge; clamped = true; }
  }
  const Eigen::VectorXd xs = linspace(xmin, xmax, samples);
  std::vector<std::array<double, 4>> rows(samples);
  for (int i = 0; i < samples; ++i) {
    rows[i] = {xs[i], mlosc::potential(xs[i], p),
               mlosc::effective_potential(xs[i], p, means),
               mlosc::mass(xs[i], p)};
  }
  if (opts.format == "json") {
    nlohmann::json j{{"params", mlosc::params_to_json(p)},
                     {"metadata",
                      {{"clamped", clamped}, {"xmin", xmin}, {"xmax", xmax}}}};
    nlohmann::json x = nlohmann::json::array(), v = nlohmann::json::array(),
                   ve = nlohmann::json::array(), m = nlohmann::json::array();
    for (const auto& row : rows) {
      x.push_back(row[0]);
      v.push_back(row[1]);
      ve.push_back(row[2]);
      m.push_back(row[3]);
    }
    j["x"] = std::move(x);
    j["V"] = std::move(v);
    j["V_eff"] = std::move(ve);
    j["m"] = std::move(m);
    emit_json(j);
  } else {
    if (clamped) {
      std::cout << "# clamped range: xmin=" << fmt(xmin) << " xmax="
                << fmt(xmax) << "\n";
    }
    std::cout << "x,V,V_eff,m\n";
    for (const auto& row : rows) {
      std::cout << fmt(row[0]) << "," << fmt(row[1]) << "," << fmt(row[2])
                << "," << fmt(row[3]) << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------------- verify

int run_verify(const CommonOptions& opts, const mlosc::VerifyConfig& config) {
  const mlosc::OscillatorParams p(opts.k, opts.lambda, opts.hbar);
  const mlosc::OrderingMeans means =
      mlosc::derived_means(resolve_ordering(opts));
  const std::vector<mlosc::VerificationReport> reports =
      mlosc::run_all(p, means, config);
  bool all_passed = true;
  if (opts.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const mlosc::VerificationReport& report : reports) {
      j.push_back(mlosc::report_to_json(report));
      all_passed = all_passed && report.passed;
    }
    emit_json(j);
  } else {
    std::cout << "check_name,max_error,tolerance,passed\n";
    for (const mlosc::VerificationReport& report : reports) {
      std::cout << report.check_name << "," << fmt(report.max_error) << ","
                << fmt(report.tolerance) << ","
                << (report.passed ? "true" : "false") << "\n";
      all_passed = all_passed && report.passed;
    }
  }
  return all_passed ? 0 : 2;
}

// -------------------------------------------------------------------- oracle

int run_oracle(const CommonOptions& opts, int points, double epsilon,
               double box_L, int levels) {
  if (levels < 1 || points < 64) {
    throw UsageError("--levels must be >= 1 and --points >= 64");
  }
  const mlosc::OscillatorParams p(opts.k, opts.lambda, opts.hbar);
  const mlosc::OrderingMeans means =
      mlosc::derived_means(resolve_ordering(opts));
  const mlosc::SpectralParams sp = mlosc::spectral_params(p, means);
  if (!sp.mu) {
    throw UsageError("oracle requires lambda != 0");
  }
  const double mu = *sp.mu;

  nlohmann::json j;
  Eigen::VectorXd energies(levels);
  double slope = 0.0;
  if (p.lambda > 0.0) {
    std::array<double, 3> first{};
    std::array<double, 3> hs{};
    for (int r = 0; r < 3; ++r) {
      const int pts = points >> (2 - r);
      const mlosc::FDGrid grid{-1.0, 1.0, pts, epsilon};
      const Eigen::VectorXd lambdas =
          mlosc::fd_oracle_positive(mu, grid, r == 2 ? levels : 1);
      first[r] = lambdas[0];
      hs[r] = (2.0 - 2.0 * epsilon) / (pts + 1);
      if (r == 2) {
        const double h2l = 0.5 * p.hbar * p.hbar * p.lambda;
        for (int n = 0; n < levels; ++n) {
          energies[n] = h2l * (lambdas[n] - mu * mu -
                               (means.gamma_bar + means.alpha_bar));
        }
      }
    }
    slope = std::log(std::abs(first[0] - first[1]) /
                     std::abs(first[1] - first[2])) /
            std::log(hs[0] / hs[1]);
    j["grid"] = {{"kind", "positive"}, {"a", -1.0}, {"b", 1.0},
                 {"points", points}};
    j["epsilon"] = epsilon;
  } else if (p.lambda < 0.0) {
    std::array<double, 3> first{};
    std::array<double, 3> hs{};
    mlosc::NegativeOracleResult result;
    for (int r = 0; r < 3; ++r) {
      const int pts = points >> (2 - r);
      result = mlosc::fd_oracle_negative(mu, box_L, pts,
                                         r == 2 ? levels : 1, p, means);
      first[r] = result.energies[0];
      hs[r] = 2.0 * box_L / (pts + 1);
    }
    energies = result.energies;
    slope = std::log(std::abs(first[0] - first[1]) /
                     std::abs(first[1] - first[2])) /
            std::log(hs[0] / hs[1]);
    j["grid"] = {{"kind", "negative"}, {"L", box_L}, {"points", points}};
    j["epsilon"] = 0.0;
    j["tail_warning"] = result.tail_warning;
    nlohmann::json bound = nlohmann::json::array();
    for (bool b : result.bound) {
      bound.push_back(b);
    }
    j["bound"] = std::move(bound);
  } else {
    throw UsageError("oracle requires lambda != 0");
  }

  nlohmann::json values = nlohmann::json::array();
  for (int n = 0; n < levels; ++n) {
    values.push_back(energies[n]);
  }
  j["values"] = std::move(values);
  j["convergence_slope"] = slope;
  if (opts.format == "json") {
    emit_json(j);
  } else {
    std::cout << "n,E\n";
    for (int n = 0; n < levels; ++n) {
      std::cout << n << "," << fmt(energies[n]) << "\n";
    }
    std::cout << "# convergence_slope," << fmt(slope) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"General-ordered Mathews-Lakshmanan oscillator toolkit"};
  app.require_subcommand(1);

  CommonOptions common;

  CLI::App* orderings = app.add_subcommand(
      "orderings", "List preset orderings with derived means and Hermiticity");
  orderings->add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int levels = 6;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Closed-form energy spectrum");
  add_param_flags(spectrum, &common);
  add_ordering_flags(spectrum, &common);
  spectrum->add_option("--levels", levels, "Number of levels (from n = 0)");

  WavefunctionOptions wopts;
  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "Sample a bound or continuum wavefunction");
  add_param_flags(wavefunction, &common);
  add_ordering_flags(wavefunction, &common);
  CLI::Option* n_opt =
      wavefunction->add_option("--n", wopts.n, "Bound level index");
  CLI::Option* rho_opt =
      wavefunction->add_option("--rho", wopts.rho, "Continuum parameter rho");
  wavefunction->add_option("--branch", wopts.branch,
                           "Continuum branch: region1 or region3");
  wavefunction->add_option("--xmin", wopts.xmin, "Range start")->required();
  wavefunction->add_option("--xmax", wopts.xmax, "Range end")->required();
  wavefunction->add_option("--samples", wopts.samples, "Sample count (>= 2)");
  wavefunction->add_option("--z-max", wopts.z_max,
                           "Conical integration limit (continuum)");

  double pot_xmin = 0.0, pot_xmax = 0.0;
  int pot_samples = 201;
  CLI::App* potential = app.add_subcommand(
      "potential", "Sample V, V_eff and the mass profile");
  add_param_flags(potential, &common);
  add_ordering_flags(potential, &common);
  potential->add_option("--xmin", pot_xmin, "Range start")->required();
  potential->add_option("--xmax", pot_xmax, "Range end")->required();
  potential->add_option("--samples", pot_samples, "Sample count (>= 2)");

  mlosc::VerifyConfig vconfig;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the verification suite");
  add_param_flags(verify, &common);
  add_ordering_flags(verify, &common);
  verify->add_option("--levels", vconfig.n_levels, "Gram-matrix size");
  verify->add_option("--quad-order", vconfig.quad_order, "Quadrature order");
  verify->add_option("--oracle-levels", vconfig.oracle_levels,
                     "Levels compared against the oracle");
  verify->add_option("--fd-points", vconfig.positive_grid.points,
                     "Oracle grid points (lambda > 0)");
  verify->add_option("--fd-epsilon", vconfig.positive_grid.epsilon,
                     "Oracle endpoint offset (lambda > 0)");
  verify->add_option("--box-L", vconfig.negative_L,
                     "Oracle box half-width (lambda < 0)");
  verify->add_option("--box-points", vconfig.negative_points,
                     "Oracle grid points (lambda < 0)");

  int oracle_points = 4000;
  double oracle_epsilon = 1e-6;
  double oracle_L = 40.0;
  int oracle_levels = 3;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Finite-difference eigenvalue oracle");
  add_param_flags(oracle, &common);
  add_ordering_flags(oracle, &common);
  oracle->add_option("--points", oracle_points, "Grid points");
  oracle->add_option("--epsilon", oracle_epsilon,
                     "Endpoint offset (lambda > 0)");
  oracle->add_option("--box-L", oracle_L, "Box half-width (lambda < 0)");
  oracle->add_option("--levels", oracle_levels, "Eigenvalues to compute");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (app.got_subcommand(orderings)) {
      return run_orderings(common);
    }
    if (app.got_subcommand(spectrum)) {
      return run_spectrum(common, levels);
    }
    if (app.got_subcommand(wavefunction)) {
      return run_wavefunction(common, wopts, n_opt->count() > 0,
                              rho_opt->count() > 0);
    }
    if (app.got_subcommand(potential)) {
      return run_potential(common, pot_xmin, pot_xmax, pot_samples);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(common, vconfig);
    }
    if (app.got_subcommand(oracle)) {
      return run_oracle(common, oracle_points, oracle_epsilon, oracle_L,
                        oracle_levels);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: malformed JSON input: " << e.what() << "\n";
    return 3;
  } catch (const mlosc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
