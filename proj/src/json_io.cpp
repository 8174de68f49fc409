#include "mlosc/json_io.hpp"

#include <cmath>

namespace mlosc {

nlohmann::json ordering_to_json(const Ordering& ordering) {
  nlohmann::json terms = nlohmann::json::array();
  for (const OrderingTerm& t : ordering.terms) {
    terms.push_back({{"w", t.w},
                     {"alpha", t.alpha},
                     {"beta", t.beta},
                     {"gamma", t.gamma}});
  }
  nlohmann::json j{{"terms", std::move(terms)}};
  if (ordering.name) {
    j["name"] = *ordering.name;
  }
  return j;
}

Ordering ordering_from_json(const nlohmann::json& j) {
  std::vector<OrderingTerm> terms;
  for (const nlohmann::json& t : j.at("terms")) {
    terms.push_back(OrderingTerm{t.at("w").get<double>(),
                                 t.at("alpha").get<double>(),
                                 t.at("beta").get<double>(),
                                 t.at("gamma").get<double>()});
  }
  std::optional<std::string> name;
  if (j.contains("name") && j["name"].is_string()) {
    name = j["name"].get<std::string>();
  }
  return make_ordering(std::move(terms), std::move(name));
}

nlohmann::json params_to_json(const OscillatorParams& p) {
  return {{"k", p.k}, {"lambda", p.lambda}, {"hbar", p.hbar}};
}

OscillatorParams params_from_json(const nlohmann::json& j) {
  return OscillatorParams(j.at("k").get<double>(),
                          j.at("lambda").get<double>(),
                          j.at("hbar").get<double>());
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::PositiveLambdaInterior:
      return "positive-lambda-interior";
    case Regime::PositiveLambdaContinuum:
      return "positive-lambda-continuum";
    case Regime::NegativeLambda:
      return "negative-lambda";
    case Regime::HarmonicLimit:
      return "harmonic-limit";
  }
  return "unknown";
}

nlohmann::json spectrum_to_json(const BoundSpectrum& spectrum) {
  nlohmann::json levels = nlohmann::json::array();
  for (const EnergyLevel& level : spectrum.levels) {
    nlohmann::json entry{{"n", level.n}, {"E", level.E}};
    if (std::isfinite(level.nu)) {
      entry["nu"] = level.nu;
    } else {
      entry["nu"] = nullptr;
    }
    levels.push_back(std::move(entry));
  }
  nlohmann::json j{{"regime", regime_name(spectrum.regime)},
                   {"d_tilde", spectrum.d_tilde},
                   {"levels", std::move(levels)},
                   {"finite", spectrum.finite}};
  j["mu"] = spectrum.mu ? nlohmann::json(*spectrum.mu) : nlohmann::json(nullptr);
  j["n_max"] =
      spectrum.n_max ? nlohmann::json(*spectrum.n_max) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [key, value] : report.details) {
    details[key] = value;
  }
  return {{"check_name", report.check_name},
          {"max_error", report.max_error},
          {"tolerance", report.tolerance},
          {"passed", report.passed},
          {"details", std::move(details)}};
}

}  // namespace mlosc
