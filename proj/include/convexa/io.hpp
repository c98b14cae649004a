#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "convexa/decision.hpp"
#include "convexa/realize2d.hpp"

namespace convexa {

inline constexpr const char* kSchema = "convexa/1";

nlohmann::json codewords_json(const std::vector<Codeword>& words, unsigned n);
nlohmann::json to_json(const NeuralCode& code);
nlohmann::json to_json(const RationalPoint& p);
nlohmann::json to_json(const ObstructionReport& r, unsigned n);
nlohmann::json to_json(const RealizationPlan& plan, unsigned n);
nlohmann::json to_json(const Realization1D& r);
nlohmann::json to_json(const Realization2D& r);
/// {"code":[...],"witnesses":{"13":["p/q","p/q"],...}}
nlohmann::json to_json(const WitnessedCode& w);

/// Reads either realization format. Throws Error(Parse) on malformed input,
/// including rings that are not convex.
Realization realization_from_json(const nlohmann::json& j);

/// {"n": 6, "code": ["1356", "123", ...]} or code entries as arrays of labels.
NeuralCode code_from_json(const nlohmann::json& j);

/// Stacked open-interval bars with region labels.
std::string render_svg(const Realization1D& r);
/// Translucent per-neuron polygons with codeword labels at witness points.
std::string render_svg(const Realization2D& r, const WitnessedCode& cert);

}  // namespace convexa
