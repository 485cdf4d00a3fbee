#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "qmoy/analysis.hpp"
#include "qmoy/ehrhart.hpp"

namespace qmoy {

// Wire format: array of {a_half_exp, num: [[x_half_exp, "p/q"], ...],
// den: [[x_half_exp, "p/q"], ...]}, ascending exponents throughout.
nlohmann::json linkpoly_to_json(const LinkPoly& p);
LinkPoly linkpoly_from_json(const nlohmann::json& j);

// Poset input file: {"elements": [..], "covers": [[lo, hi], ..],
// "form": {element: coeff}}.
std::pair<Poset, LinearForm> poset_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(const BoundsReport& rep);
nlohmann::json head_to_json(const HeadReport& rep);
nlohmann::json slopes_to_json(const std::vector<SlopePoint>& pts);

}  // namespace qmoy
