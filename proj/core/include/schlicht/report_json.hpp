#pragma once

// Serialization of lab results. JSON documents are pretty-printed with two
// spaces; CSV values use 17 significant digits.

#include <string>

#include "schlicht/radius_lab.hpp"

namespace schlicht {

std::string to_string(RadiusKind kind);

std::string radius_report_to_json(const RadiusReport& report);
std::string seminorm_to_json(const SeminormEstimate& estimate, const std::string& label);
std::string divergence_to_json(const DivergenceProfile& profile, const std::string& label);
std::string divergence_to_csv(const DivergenceProfile& profile);
std::string constants_to_json(const ConstantsTable& table);
std::string refutation_to_json(const RefutationReport& report, double p);
std::string two_pole_to_json(const TwoPoleReport& report);

}  // namespace schlicht
