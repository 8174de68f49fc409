#pragma once

#include <string>

#include <json.hpp>

#include "mlosc/ordering.hpp"
#include "mlosc/oscillator.hpp"
#include "mlosc/spectra.hpp"
#include "mlosc/verify.hpp"

namespace mlosc {

/// {"name": ..., "terms": [{"w":..., "alpha":..., "beta":..., "gamma":...}]}
nlohmann::json ordering_to_json(const Ordering& ordering);
Ordering ordering_from_json(const nlohmann::json& j);

/// {"k":..., "lambda":..., "hbar":...}
nlohmann::json params_to_json(const OscillatorParams& p);
OscillatorParams params_from_json(const nlohmann::json& j);

std::string regime_name(Regime regime);

/// {"regime":..., "mu":..., "d_tilde":..., "levels":[{"n","nu","E"}],
///  "finite":..., "n_max":...}
nlohmann::json spectrum_to_json(const BoundSpectrum& spectrum);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace mlosc
